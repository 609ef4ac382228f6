#include "intertwine/classifier.hpp"

#include "intertwine/errors.hpp"

namespace intertwine {

namespace {

using Centers = std::array<Rational, 4>;

Rational half(std::int64_t v) { return Rational(v, 2); }

// Checks X against a segment pattern: relative to the anchor block, every
// nonempty block's nu-exponent differs by the pattern's center difference,
// and s_im and the unit tag are shared. Returns the twist psi.
std::optional<CharFx> fits_segments(const Quadruple& x, const Centers& centers, std::size_t anchor) {
  const CharFx& a = x[anchor].chi();
  for (std::size_t b = 0; b < 4; ++b) {
    if (x[b].empty()) continue;
    const CharFx& c = x[b].chi();
    if (c.s_re() - a.s_re() != centers[b] - centers[anchor]) return std::nullopt;
    if (c.s_im() != a.s_im() || c.tag() != a.tag()) return std::nullopt;
  }
  return CharFx(x.field(), a.s_re() - centers[anchor], a.s_im(), a.tag());
}

bool is_identity(const Quadruple& x) { return x[2] == x[0] && x[3] == x[1]; }
bool is_swap(const Quadruple& x) { return x[2] == x[1] && x[3] == x[0]; }

std::optional<PatternMatch> match_rank1(const Quadruple& x) {
  const int k = x.n(), j = x.size(1), i = x.size(2);
  if (x.size(0) < 1 || x.size(3) < 1 || i == j) return std::nullopt;
  Centers centers{half(j + k), half(j), half(i), half(i + k)};
  if (auto psi = fits_segments(x, centers, 3)) return PatternMatch{cert::Rank1{i, j, k}, *psi};
  return std::nullopt;
}

std::optional<PatternMatch> match_radon(const Quadruple& x, cert::RadonCase which) {
  const int p1 = x.size(0), p2 = x.size(1), p3 = x.size(2), p4 = x.size(3);
  int i = 0, j = 0, k = 0;
  Centers centers;
  std::size_t anchor = 2;
  switch (which) {
    case cert::RadonCase::A:  // [0,k) x [i,j) -> [0,j) x [i,k)
      k = p1, j = p3, i = p3 - p2;
      if (p4 != k - i) return std::nullopt;
      centers = {half(k), half(i + j), half(j), half(i + k)};
      break;
    case cert::RadonCase::B:  // [i,j) x [0,k) -> [0,j) x [i,k)
      k = p2, j = p3, i = p3 - p1;
      if (p4 != k - i) return std::nullopt;
      centers = {half(i + j), half(k), half(j), half(i + k)};
      break;
    case cert::RadonCase::C:  // [i,k) x [0,j) -> [0,k) x [i,j)
      k = p3, j = p2, i = k - p1;
      if (p4 != j - i) return std::nullopt;
      centers = {half(i + k), half(j), half(k), half(i + j)};
      break;
    case cert::RadonCase::D:  // [i,k) x [0,j) -> [i,j) x [0,k)
      k = p4, j = p2, i = k - p1;
      if (p3 != j - i) return std::nullopt;
      centers = {half(i + k), half(j), half(i + j), half(k)};
      anchor = 3;
      break;
  }
  if (!(0 < i && i < j && j < k)) return std::nullopt;
  if (auto psi = fits_segments(x, centers, anchor)) return PatternMatch{cert::Radon{which, i, j, k}, *psi};
  return std::nullopt;
}

std::optional<PatternMatch> match_identity(const Quadruple& x) {
  for (const auto& o : orientations(x))
    if (is_identity(o)) return PatternMatch{cert::Identity{}, CharFx(x.field())};
  return std::nullopt;
}

std::optional<PatternMatch> match_knapp_stein(const Quadruple& x) {
  for (const auto& o : orientations(x))
    if (is_swap(o)) return PatternMatch{cert::KnappStein{}, CharFx(x.field())};
  return std::nullopt;
}

std::optional<PatternMatch> match_rank1_any(const Quadruple& x) {
  for (const auto& o : orientations(x))
    if (auto m = match_rank1(o)) return m;
  return std::nullopt;
}

std::optional<PatternMatch> match_radon_any(const Quadruple& x) {
  // Radon patterns have no empty blocks, so orientation does not matter.
  for (auto which : {cert::RadonCase::A, cert::RadonCase::B, cert::RadonCase::C, cert::RadonCase::D})
    if (auto m = match_radon(x, which)) return m;
  return std::nullopt;
}

// chi1 x chi2 on GL_n(R or C) has a finite-dimensional irreducible quotient of
// dimension > 1 iff chi1 Delta^{-1/2} (x) chi2 Delta^{-1/2} is, up to a common
// character, a block-constant dominant weight with distinct blocks.
bool has_large_finite_quotient(const Quadruple& x) {
  if (!x.field().archimedean() || x[0].empty() || x[1].empty()) return false;
  const CharFx& a = x[0].chi();
  const CharFx& b = x[1].chi();
  if (a.s_im() != b.s_im()) return false;
  const Rational gap = a.s_re() - b.s_re() - half(x.n());
  const std::int64_t tag_gap = a.tag()[0] - b.tag()[0];
  if (x.field().kind() == FieldKind::Real) {
    if (!is_integer(gap) || gap < 1) return false;
    return (tag_gap - gap.numerator()) % 2 == 0;
  }
  const Rational doubled = gap * 2;
  if (!is_integer(doubled) || doubled < 1) return false;
  const std::int64_t t = doubled.numerator();
  return (tag_gap <= t && -tag_gap <= t) && (t - tag_gap) % 2 == 0;
}

}  // namespace

bool central_constraint(const Quadruple& x) {
  const CharFx lhs = x[0].chi().pow(x.size(0)) * x[1].chi().pow(x.size(1));
  const CharFx rhs = x[2].chi().pow(x.size(2)) * x[3].chi().pow(x.size(3));
  return lhs == rhs;
}

Quadruple twist(const Quadruple& x, const CharFx& psi) {
  auto tw = [&psi](const GLChar& c) { return GLChar(c.size(), c.chi() * psi); };
  return Quadruple(tw(x[0]), tw(x[1]), tw(x[2]), tw(x[3]));
}

std::vector<Quadruple> orientations(const Quadruple& x) {
  std::vector<Quadruple> out{x};
  const bool flip_source = x[0].empty() || x[1].empty();
  const bool flip_target = x[2].empty() || x[3].empty();
  if (flip_source) out.emplace_back(x[1], x[0], x[2], x[3]);
  if (flip_target) out.emplace_back(x[0], x[1], x[3], x[2]);
  if (flip_source && flip_target) out.emplace_back(x[1], x[0], x[3], x[2]);
  return out;
}

std::optional<PatternMatch> match_standard(const Quadruple& x) {
  if (auto m = match_identity(x)) return m;
  return match_knapp_stein(x);
}

std::optional<PatternMatch> match_mixed(const Quadruple& x) {
  if (auto m = match_rank1_any(x)) return m;
  return match_radon_any(x);
}

std::optional<PatternMatch> match_exceptional(const Quadruple& x) {
  const int k = x.size(0);
  if (!x.field().archimedean() || k < 1) return std::nullopt;
  if (x.size(1) != k || x.size(2) != k || x.size(3) != k) return std::nullopt;

  const CharFx& base = x[0].chi();
  std::array<Rational, 4> ds;
  std::array<std::int64_t, 4> dm;
  for (std::size_t b = 0; b < 4; ++b) {
    if (x[b].chi().s_im() != base.s_im()) return std::nullopt;
    ds[b] = x[b].chi().s_re() - base.s_re();
    dm[b] = x[b].chi().tag()[0] - base.tag()[0];
  }

  if (x.field().kind() == FieldKind::Real) {
    // (psi, psi delta^i sgn; psi delta^i, psi sgn) with delta = nu sgn.
    if (!is_integer(ds[2]) || ds[2] < 1) return std::nullopt;
    const std::int64_t i = ds[2].numerator();
    auto parity = [](std::int64_t v) { return ((v % 2) + 2) % 2; };
    if (ds[1] != i || ds[3] != 0) return std::nullopt;
    if (parity(dm[1]) != parity(i + 1) || parity(dm[2]) != parity(i) || parity(dm[3]) != 1) return std::nullopt;
    return PatternMatch{cert::RealCapelli{k, static_cast<int>(i)}, base};
  }

  // Over C: delta = nu^{1/2} circ^1, deltabar = nu^{1/2} circ^{-1}.
  auto check = [&](int variant, std::int64_t i, std::int64_t j) -> std::optional<PatternMatch> {
    if (i < 1) return std::nullopt;
    const std::int64_t sign = variant == 1 ? 1 : -1;
    if (ds[1] != half(i + j) || dm[1] != sign * (i - j)) return std::nullopt;
    if (ds[2] != half(i) || dm[2] != sign * i) return std::nullopt;
    if (ds[3] != half(j) || dm[3] != -sign * j) return std::nullopt;
    return PatternMatch{cert::ComplexCapelli{variant, k, static_cast<int>(i), static_cast<int>(j)}, base};
  };
  if (auto m = check(1, dm[2], -dm[3])) return m;
  return check(2, -dm[2], dm[3]);
}

Classification classify(const Quadruple& x) {
  if (!central_constraint(x)) return Classification::none(x.field(), cert::NoFamilyReason::CentralConstraintFailed);
  for (auto matcher : {match_identity, match_rank1_any, match_radon_any, match_exceptional, match_knapp_stein}) {
    if (auto m = matcher(x)) return {1, m->certificate, m->twist};
  }
  return Classification::none(x.field(), cert::NoFamilyReason::NoPattern);
}

Quadruple derivative_quadruple(const Quadruple& x) {
  for (const auto& b : x.blocks())
    if (b.empty()) throw DomainError("derivative requires every block size to be at least 1");
  return Quadruple(x[0].restricted(), x[1].restricted(), x[2].restricted(), x[3].restricted());
}

Quadruple extend_quadruple(const Quadruple& x) {
  return Quadruple(x[0].extended(), x[1].extended(), x[2].extended(), x[3].extended());
}

std::optional<PatternMatch> has_finite_rank_pattern(const Quadruple& x) {
  const FieldSpec& field = x.field();
  const int n = x.n();
  // phi = psi o det is a quotient of chi1 x chi2 iff chi1 = psi nu^{p2/2}, chi2 = psi nu^{-p1/2},
  // and a submodule of chi3 x chi4 iff chi3 = psi nu^{-p4/2}, chi4 = psi nu^{p3/2}.
  std::array<Rational, 4> shift{half(-x.size(1)), half(x.size(0)), half(x.size(3)), half(-x.size(2))};
  std::optional<CharFx> phi;
  bool consistent = true;
  for (std::size_t b = 0; b < 4 && consistent; ++b) {
    if (x[b].empty()) continue;
    CharFx candidate = x[b].chi() * CharFx::nu(field, shift[b]);
    if (!phi) phi = candidate;
    else consistent = (*phi == candidate);
  }
  if (consistent && phi) {
    const int i = x[3].empty() ? 0 : x.size(2);
    const int j = x[0].empty() ? 0 : x.size(1);
    if (i == j) {
      auto standard = match_standard(x);
      return PatternMatch{standard ? standard->certificate : Certificate{cert::KnappStein{}}, CharFx(field)};
    }
    return PatternMatch{cert::Rank1{i, j, n}, *phi * CharFx::nu(field, half(-n))};
  }
  if (x.size(2) == x.size(1) && x.size(3) == x.size(0) && is_swap(x) && has_large_finite_quotient(x))
    return PatternMatch{cert::KnappStein{}, CharFx(field)};
  return std::nullopt;
}

}  // namespace intertwine
