#pragma once

#include "intertwine/classifier.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace intertwine {

/// The canonical member (trivial twist) of a parameterized family:
/// Rank1, Radon, RealCapelli or ComplexCapelli. Throws DomainError for
/// Standard and NoFamily certificates, which carry no characters.
Quadruple family_instance(const FieldSpec& field, const Certificate& c);

struct FamilyMember {
  Quadruple quadruple;
  Classification classification;
};

struct EnumerationBounds {
  int n = 1;
  Rational exponent_bound{1};
  int param_bound = 1;
  std::uint64_t seed = 0x5eed;
};

/// Streams every family member of total size n: standard members over the
/// half-integer exponent grid |s| <= exponent_bound (times the tag grid), all
/// mixed members, and exceptional members with 1 <= i, |j| <= param_bound;
/// each once at trivial twist and once under a seeded pseudorandom twist.
/// Members are emitted at most once.
void enumerate_family(const FieldSpec& field, const EnumerationBounds& bounds,
                      const std::function<void(const FamilyMember&)>& sink);

std::vector<FamilyMember> enumerate_family(const FieldSpec& field, const EnumerationBounds& bounds);

/// Character grid used for standard members and random twists: nu-exponents
/// k/2 with |k/2| <= bound, times every tag in the field's tag grid
/// (R: sgn^0,1; C: circ^-1..1; NonArch: the whole declared tag group).
std::vector<CharFx> character_grid(const FieldSpec& field, Rational bound);

}  // namespace intertwine
