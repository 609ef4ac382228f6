#pragma once

#include "intertwine/certificate.hpp"
#include "intertwine/quadruple.hpp"

#include <optional>
#include <vector>

namespace intertwine {

/// A family pattern recognised in a quadruple, with the twist that realizes it.
struct PatternMatch {
  Certificate certificate;
  CharFx twist;
};

/// p1 psi1 + p2 psi2 == p3 psi3 + p4 psi4 in exponents and in the tag group.
bool central_constraint(const Quadruple& x);

/// psi X: multiplies every nonempty block by psi.
Quadruple twist(const Quadruple& x, const CharFx& psi);

/// X and the quadruples obtained by swapping the two blocks of a side that has
/// an empty block (chi x 1 and 1 x chi denote the same representation).
std::vector<Quadruple> orientations(const Quadruple& x);

std::optional<PatternMatch> match_standard(const Quadruple& x);
std::optional<PatternMatch> match_mixed(const Quadruple& x);
std::optional<PatternMatch> match_exceptional(const Quadruple& x);

/// Direct classification by family pattern matching.
Classification classify(const Quadruple& x);

/// Blockwise restriction X' (all p_i >= 1 required) and extension X+.
Quadruple derivative_quadruple(const Quadruple& x);
Quadruple extend_quadruple(const Quadruple& x);

/// Finite-rank intertwiners: rank one through a one-dimensional character
/// (Standard when i = j, Rank1 otherwise), or, over R and C, the swap
/// (chi2, chi1) when chi1 x chi2 has a finite-dimensional quotient of dim > 1.
std::optional<PatternMatch> has_finite_rank_pattern(const Quadruple& x);

}  // namespace intertwine
