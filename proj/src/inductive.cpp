#include "intertwine/inductive.hpp"

#include "intertwine/family.hpp"

#include <algorithm>

namespace intertwine {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Rebuilds X from the extension of X' and pins the size-one blocks, whose
// characters X' does not see, from the central constraint. With a size-one
// block on each side only the target one is pinned.
Quadruple lift_with_pinned_blocks(const Quadruple& x) {
  const Quadruple lower = derivative_quadruple(x);
  std::array<GLChar, 4> blocks{x[0], x[1], x[2], x[3]};
  for (std::size_t b = 0; b < 4; ++b)
    if (x.size(b) >= 2) blocks[b] = lower[b].extended();

  std::optional<std::size_t> pinned;
  for (std::size_t b : {2, 3, 0, 1})
    if (!pinned && x.size(b) == 1) pinned = b;
  if (pinned) {
    const std::size_t b = *pinned;
    const std::size_t other = b ^ 1;
    const std::size_t s0 = b < 2 ? 2 : 0;
    const CharFx opposite = blocks[s0].chi().pow(blocks[s0].size()) * blocks[s0 + 1].chi().pow(blocks[s0 + 1].size());
    blocks[b] = GLChar(1, opposite / blocks[other].chi().pow(blocks[other].size()));
  }
  return Quadruple(blocks[0], blocks[1], blocks[2], blocks[3]);
}

std::optional<CharFx> realize(const Quadruple& x, const Certificate& candidate) {
  switch (kind_of(candidate)) {
    case CertificateKind::Identity:
    case CertificateKind::KnappStein: {
      const Quadruple y = lift_with_pinned_blocks(x);
      const bool pattern = kind_of(candidate) == CertificateKind::Identity ? (y[2] == y[0] && y[3] == y[1])
                                                                            : (y[2] == y[1] && y[3] == y[0]);
      if (pattern && y == x) return CharFx(x.field());
      return std::nullopt;
    }
    case CertificateKind::NoFamily: return std::nullopt;
    default: break;
  }
  const Quadruple y = family_instance(x.field(), candidate);
  for (std::size_t b = 0; b < 4; ++b)
    if (y.size(b) != x.size(b)) return std::nullopt;
  std::size_t anchor = 0;
  while (x[anchor].empty()) ++anchor;
  const CharFx psi = x[anchor].chi() / y[anchor].chi();
  if (twist(y, psi) == x) return psi;
  return std::nullopt;
}

}  // namespace

std::vector<Certificate> lift_candidates(const Certificate& lower) {
  using cert::RadonCase;
  std::vector<Certificate> out = std::visit(
      overloaded{
          [](const cert::Identity&) { return std::vector<Certificate>{cert::Identity{}, cert::KnappStein{}}; },
          [](const cert::KnappStein&) { return std::vector<Certificate>{cert::KnappStein{}}; },
          [](const cert::Rank1& r) {
            // A Radon member with a size-one block has a rank-one derivative
            // whose degenerate side is alpha~_0 (cases a, b) or alpha_0 (c, d).
            std::vector<Certificate> v;
            if (r.j == 0 && r.i >= 1)
              for (auto w : {RadonCase::A, RadonCase::B}) v.push_back(cert::Radon{w, r.i, r.i + 1, r.k + 1});
            if (r.i == 0 && r.j >= 1)
              for (auto w : {RadonCase::C, RadonCase::D}) v.push_back(cert::Radon{w, r.j, r.j + 1, r.k + 1});
            return v;
          },
          [](const cert::Radon& r) {
            return std::vector<Certificate>{cert::Radon{r.which, r.i, r.j + 1, r.k + 1}};
          },
          [](const cert::RealCapelli& r) { return std::vector<Certificate>{cert::RealCapelli{r.k + 1, r.i}}; },
          [](const cert::ComplexCapelli& r) {
            return std::vector<Certificate>{cert::ComplexCapelli{r.variant, r.k + 1, r.i, r.j}};
          },
          [](const cert::NoFamily&) { return std::vector<Certificate>{}; },
      },
      lower);
  std::stable_sort(out.begin(), out.end(), [](const Certificate& a, const Certificate& b) {
    return priority(kind_of(a)) < priority(kind_of(b));
  });
  return out;
}

Classification inductive_classify(const Quadruple& x, std::vector<TraceEntry>* trace) {
  auto note = [&](InductiveStep step) {
    if (trace) trace->push_back({step, x.n()});
  };
  if (!central_constraint(x)) {
    note(InductiveStep::ConstraintFailed);
    return Classification::none(x.field(), cert::NoFamilyReason::CentralConstraintFailed);
  }
  if (auto m = has_finite_rank_pattern(x)) {
    note(InductiveStep::FiniteRank);
    return {1, m->certificate, m->twist};
  }
  if (x.n() <= 2 || x.has_empty_block()) {
    note(InductiveStep::Direct);
    return classify(x);
  }

  const Classification lower = inductive_classify(derivative_quadruple(x), trace);
  if (lower.dim == 0) {
    note(InductiveStep::LowerEmpty);
    return Classification::none(x.field(), cert::NoFamilyReason::NoPattern);
  }
  for (const auto& candidate : lift_candidates(lower.certificate))
    if (auto psi = realize(x, candidate)) {
      note(InductiveStep::Lift);
      return {1, candidate, *psi};
    }
  note(InductiveStep::LiftFailed);
  return Classification::none(x.field(), cert::NoFamilyReason::LiftFailed);
}

}  // namespace intertwine
