#pragma once

#include "intertwine/family.hpp"

#include <functional>
#include <random>
#include <vector>

namespace intertwine {

/// Characters nu^{s} * tag with s a half-integer in [lo, hi], times the field's tag grid.
std::vector<CharFx> exponent_grid(const FieldSpec& field, Rational lo, Rational hi);

/// Every quadruple with 1 <= n <= max_n whose nonempty blocks carry characters from `chars`.
void for_each_grid_quadruple(const FieldSpec& field, int max_n, const std::vector<CharFx>& chars,
                             const std::function<void(const Quadruple&)>& visit);

/// Random quadruples biased towards the interesting region: family members
/// under random twists (including imaginary exponents), perturbed members with a
/// size-one block re-pinned to satisfy the central constraint, and uniform draws.
class RandomQuadruples {
 public:
  RandomQuadruples(const FieldSpec& field, int max_n, std::uint64_t seed);
  Quadruple next();

 private:
  CharFx random_char();
  Quadruple pin(const Quadruple& x);

  const FieldSpec* field_;
  int max_n_;
  std::mt19937_64 rng_;
  std::vector<CharFx> grid_;
  std::vector<FamilyMember> members_;
};

struct Disagreement {
  Quadruple quadruple;
  Classification direct, inductive;
};

struct CrossCheckTally {
  std::size_t checked = 0;
  std::vector<Disagreement> disagreements;

  void record(const Quadruple& x);
};

}  // namespace intertwine
