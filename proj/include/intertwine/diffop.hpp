#pragma once

#include "intertwine/character.hpp"
#include "intertwine/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace intertwine {

using Monomial = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable largest.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Variables of the big cell Mat_{k x k}: x_ab, optionally the conjugate
/// copy xb_ab, followed by formal parameters (never differentiated).
struct VarLayout {
  int k = 1;
  bool conjugate = false;
  std::vector<std::string> params;

  int copies() const { return conjugate ? 2 : 1; }
  std::size_t nderiv() const { return static_cast<std::size_t>(copies() * k * k); }
  std::size_t nvars() const { return nderiv() + params.size(); }
  std::size_t index(int copy, int a, int b) const { return static_cast<std::size_t>(copy * k * k + a * k + b); }
  std::size_t param(std::size_t p) const { return nderiv() + p; }
  std::string name(std::size_t var) const;
};

/// Polynomial with exact rational coefficients; zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, Rational c);
  static MultiPoly variable(std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  void add_term(const Monomial& m, Rational c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(Rational c) const;
  MultiPoly pow(int e) const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// d^gamma / dx^gamma; gamma may be shorter than nvars.
  MultiPoly partial(const Monomial& gamma) const;

  std::string to_string(const VarLayout& layout) const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

/// Sum of coefficient(x) * d^alpha with all derivatives on the right.
class PolyDiffOp {
 public:
  using Terms = std::map<Monomial, MultiPoly, GradedLex>;

  PolyDiffOp() = default;
  PolyDiffOp(std::size_t nvars, std::size_t nderiv) : nvars_(nvars), nderiv_(nderiv) {}
  static PolyDiffOp zero(const VarLayout& l) { return PolyDiffOp(l.nvars(), l.nderiv()); }
  static PolyDiffOp multiplication(const VarLayout& l, const MultiPoly& p);
  static PolyDiffOp derivative(const VarLayout& l, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  std::size_t nderiv() const { return nderiv_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;
  void add_term(const Monomial& alpha, const MultiPoly& coeff);

  PolyDiffOp operator+(const PolyDiffOp& o) const;
  PolyDiffOp operator-(const PolyDiffOp& o) const;
  PolyDiffOp operator*(Rational c) const;
  bool operator==(const PolyDiffOp& o) const {
    return nvars_ == o.nvars_ && nderiv_ == o.nderiv_ && terms_ == o.terms_;
  }

  std::string to_string(const VarLayout& layout) const;

 private:
  std::size_t nvars_ = 0, nderiv_ = 0;
  Terms terms_;
};

/// Product D1 o D2 in normal form (Leibniz rule).
PolyDiffOp compose(const PolyDiffOp& d1, const PolyDiffOp& d2);
PolyDiffOp commutator(const PolyDiffOp& d1, const PolyDiffOp& d2);

using RatMatrix = std::vector<std::vector<Rational>>;

/// Elementary matrix E_uv of gl_{2k} (0-based u, v).
RatMatrix elementary(int k, int u, int v);
std::string basis_name(int u, int v, bool conjugate_copy = false);

/// d pi(X) on the big cell for the exponent pair (s1, s2), acting through the
/// variables of `copy`: vector field X21 + x X11 - X22 x - x X12 x and
/// multiplier (s1 + k/2)(tr X - tau) + (s2 - k/2) tau, tau = tr(x X12 + X22).
PolyDiffOp cell_operator(const VarLayout& layout, int copy, const RatMatrix& x, const MultiPoly& s1,
                         const MultiPoly& s2);

/// d pi(E_uv) for all (2k)^2 basis elements, index u * 2k + v.
std::vector<PolyDiffOp> build_cell_action(const VarLayout& layout, int copy, const MultiPoly& s1,
                                          const MultiPoly& s2);
std::vector<PolyDiffOp> build_cell_action(int k, Rational s1, Rational s2);

/// (sum_sigma sgn(sigma) prod_a d_{a,sigma(a)})^i over the variables of `copy`.
PolyDiffOp det_partial_power(const VarLayout& layout, int copy, int i);
PolyDiffOp det_partial_power(int k, int i);

struct BracketReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::string witness;  // "[E12,E21]" on failure
};

/// d pi([X, Y]) = [d pi(X), d pi(Y)] for all basis pairs with symbolic
/// exponents; over C both copies and their mutual commutation are checked.
BracketReport bracket_fidelity(FieldKind field, int k);

struct DiffopReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;  // first failing basis element
  std::string residue;  // D o d pi_chi(E) - d pi_eta(E) o D
};

/// Exponents per copy: over R {s1, s2}; over C {a1, a2, b1, b2}
/// (holomorphic then antiholomorphic).
struct ExponentData {
  std::vector<Rational> chi, eta;
};

/// The pattern's exponents: R (0, i) -> (i, 0). C variant 1: holomorphic
/// (0, i) -> (i, 0), antiholomorphic (0, j) -> (0, j); variant 2 swaps the
/// roles of the two copies.
ExponentData exceptional_exponents(FieldKind field, int i, int j = 0, int variant = 1);

/// Slot names in ExponentData order: "s1","s2" or "a1","a2","b1","b2".
std::vector<std::string> exponent_slots(FieldKind field);

/// Checks D o d pi_chi(E) = d pi_eta(E) o D for every basis element, where D is
/// det(d)^i on the holomorphic copy (R, C variant 1) or det(dbar)^i (C variant 2).
DiffopReport verify_intertwining(FieldKind field, int k, int i, int variant, const ExponentData& exps);
DiffopReport verify_exceptional(FieldKind field, int k, int i, int j = 0, int variant = 1);

/// det(a x b^-1)^i = det(a)^i det(b)^-i det(x)^i for `trials` random
/// invertible rational a, b.
bool verify_adjoint_covariance(int k, int i, int trials, std::uint64_t seed = 0x5eed);

}  // namespace intertwine
