#pragma once

#include "intertwine/classifier.hpp"

#include <vector>

namespace intertwine {

/// Level-n certificates whose derivative pattern is the given level-(n-2) one.
std::vector<Certificate> lift_candidates(const Certificate& lower);

/// How one level of the recursion was decided.
enum class InductiveStep { ConstraintFailed, FiniteRank, Direct, Lift, LiftFailed, LowerEmpty };

struct TraceEntry {
  InductiveStep step;
  int n;
  bool operator==(const TraceEntry&) const = default;
};

/// Classification by induction on n through X -> X':
///  1. central constraint fails -> dim 0;
///  2. a finite-rank pattern decides directly;
///  3. n <= 2 or an empty block -> the direct matcher;
///  4. otherwise classify X' recursively and lift its certificate, pinning
///     size-one blocks from the central constraint.
/// Levels are appended innermost first when `trace` is given.
Classification inductive_classify(const Quadruple& x, std::vector<TraceEntry>* trace = nullptr);

}  // namespace intertwine
