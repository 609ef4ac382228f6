#include "intertwine/family.hpp"

#include "intertwine/errors.hpp"

#include <random>
#include <unordered_set>

namespace intertwine {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

std::uint64_t fingerprint(const Quadruple& x) {
  std::uint64_t h = 0;
  for (const auto& b : x.blocks()) {
    const CharFx& c = b.chi();
    h = mix(h, static_cast<std::uint64_t>(b.size()));
    h = mix(h, static_cast<std::uint64_t>(c.s_re().numerator()));
    h = mix(h, static_cast<std::uint64_t>(c.s_re().denominator()));
    h = mix(h, static_cast<std::uint64_t>(c.s_im().numerator()));
    h = mix(h, static_cast<std::uint64_t>(c.s_im().denominator()));
    for (auto t : c.tag()) h = mix(h, static_cast<std::uint64_t>(t));
  }
  return h;
}

// delta^i or deltabar^i with i >= 1: the standard swap coincides with an exceptional member.
bool is_complex_capelli_ratio(const CharFx& ratio) {
  if (ratio.field().kind() != FieldKind::Complex || ratio.s_im() != 0) return false;
  const Rational twice = ratio.s_re() * 2;
  if (!is_integer(twice) || twice < 1) return false;
  const auto m = ratio.tag()[0];
  return m == twice.numerator() || m == -twice.numerator();
}

}  // namespace

Quadruple family_instance(const FieldSpec& f, const Certificate& c) {
  return std::visit(
      overloaded{
          [&](const cert::Rank1& r) {
            return Quadruple(segment(f, r.j, r.k), segment(f, 0, r.j), segment(f, 0, r.i), segment(f, r.i, r.k));
          },
          [&](const cert::Radon& r) {
            const int i = r.i, j = r.j, k = r.k;
            switch (r.which) {
              case cert::RadonCase::A:
                return Quadruple(segment(f, 0, k), segment(f, i, j), segment(f, 0, j), segment(f, i, k));
              case cert::RadonCase::B:
                return Quadruple(segment(f, i, j), segment(f, 0, k), segment(f, 0, j), segment(f, i, k));
              case cert::RadonCase::C:
                return Quadruple(segment(f, i, k), segment(f, 0, j), segment(f, 0, k), segment(f, i, j));
              case cert::RadonCase::D:
                break;
            }
            return Quadruple(segment(f, i, k), segment(f, 0, j), segment(f, i, j), segment(f, 0, k));
          },
          [&](const cert::RealCapelli& r) {
            const CharFx delta_i = det_character(f, r.i);
            const CharFx sgn = sign_character(f);
            return Quadruple(GLChar(r.k, CharFx(f)), GLChar(r.k, delta_i * sgn), GLChar(r.k, delta_i),
                             GLChar(r.k, sgn));
          },
          [&](const cert::ComplexCapelli& r) {
            const CharFx a = r.variant == 1 ? det_character(f, r.i) : det_bar_character(f, r.i);
            const CharFx b = r.variant == 1 ? det_bar_character(f, r.j) : det_character(f, r.j);
            return Quadruple(GLChar(r.k, CharFx(f)), GLChar(r.k, a * b), GLChar(r.k, a), GLChar(r.k, b));
          },
          [](const auto&) -> Quadruple {
            throw DomainError("family_instance needs a parameterized (mixed or exceptional) certificate");
          },
      },
      c);
}

std::vector<CharFx> character_grid(const FieldSpec& field, Rational bound) {
  std::vector<UnitTag> tags;
  switch (field.kind()) {
    case FieldKind::Real: tags = {{0}, {1}}; break;
    case FieldKind::Complex: tags = {{-1}, {0}, {1}}; break;
    case FieldKind::NonArch: {
      tags = {UnitTag(field.tag_arity(), 0)};
      for (std::size_t c = 0; c < field.tag_arity(); ++c) {
        std::vector<UnitTag> next;
        for (const auto& t : tags)
          for (int r = 0; r < field.tag_orders()[c]; ++r) {
            auto u = t;
            u[c] = r;
            next.push_back(u);
          }
        tags = std::move(next);
      }
      break;
    }
  }
  std::vector<CharFx> grid;
  const auto steps = (bound * 2).numerator() / (bound * 2).denominator();
  for (std::int64_t s = -steps; s <= steps; ++s)
    for (const auto& t : tags) grid.emplace_back(field, Rational(s, 2), 0, t);
  return grid;
}

void enumerate_family(const FieldSpec& field, const EnumerationBounds& bounds,
                      const std::function<void(const FamilyMember&)>& sink) {
  const int n = bounds.n;
  if (n < 1 || bounds.exponent_bound < 0 || bounds.param_bound < 0)
    throw DomainError("enumerate_family needs n >= 1 and non-negative bounds");

  const auto grid = character_grid(field, bounds.exponent_bound);
  std::vector<CharFx> twists;
  for (const auto& c : grid)
    if (!c.is_trivial()) twists.push_back(c);
  std::mt19937_64 rng(mix(bounds.seed, static_cast<std::uint64_t>(n)));
  std::uniform_int_distribution<std::size_t> pick(0, twists.empty() ? 0 : twists.size() - 1);

  std::unordered_set<std::uint64_t> seen;
  auto emit_one = [&](const Quadruple& x, const Certificate& c, const CharFx& psi) {
    if (!seen.insert(fingerprint(x)).second) return;
    sink(FamilyMember{x, Classification{1, c, psi}});
  };
  // Standard certificates carry no twist; the others record psi.
  auto emit = [&](const Quadruple& x, const Certificate& c) {
    const bool standard = kind_of(c) == CertificateKind::Identity || kind_of(c) == CertificateKind::KnappStein;
    emit_one(x, c, CharFx(field));
    if (twists.empty()) return;
    const CharFx& psi = twists[pick(rng)];
    emit_one(twist(x, psi), c, standard ? CharFx(field) : psi);
  };

  const std::vector<CharFx> trivial_only{CharFx(field)};
  for (int p1 = 0; p1 <= n; ++p1) {
    const int p2 = n - p1;
    for (const auto& a : p1 == 0 ? trivial_only : grid) {
      for (const auto& b : p2 == 0 ? trivial_only : grid) {
        const GLChar c1(p1, a), c2(p2, b);
        emit(Quadruple(c1, c2, c1, c2), cert::Identity{});
        // Swaps that are also identities (degenerate side, or equal blocks) or
        // complex Capelli members are emitted under those certificates instead.
        if (p1 == 0 || p2 == 0 || (p1 == p2 && a == b)) continue;
        if (p1 == p2 && is_complex_capelli_ratio(b / a)) continue;
        emit(Quadruple(c1, c2, c2, c1), cert::KnappStein{});
      }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        const cert::Rank1 c{i, j, n};
        emit(family_instance(field, c), c);
      }

  for (int k = 3; k <= n; ++k)
    for (int j = 2; j < k; ++j) {
      const int i = k + j - n;
      if (!(0 < i && i < j)) continue;
      for (auto which : {cert::RadonCase::A, cert::RadonCase::B, cert::RadonCase::C, cert::RadonCase::D}) {
        const cert::Radon c{which, i, j, k};
        emit(family_instance(field, c), c);
      }
    }

  if (field.archimedean() && n % 2 == 0) {
    const int k = n / 2;
    const int bound = bounds.param_bound;
    for (int i = 1; i <= bound; ++i) {
      if (field.kind() == FieldKind::Real) {
        const cert::RealCapelli c{k, i};
        emit(family_instance(field, c), c);
        continue;
      }
      for (int variant = 1; variant <= 2; ++variant)
        for (int j = -bound; j <= bound; ++j) {
          const cert::ComplexCapelli c{variant, k, i, j};
          emit(family_instance(field, c), c);
        }
    }
  }
}

std::vector<FamilyMember> enumerate_family(const FieldSpec& field, const EnumerationBounds& bounds) {
  std::vector<FamilyMember> out;
  enumerate_family(field, bounds, [&out](const FamilyMember& m) { out.push_back(m); });
  return out;
}

}  // namespace intertwine
