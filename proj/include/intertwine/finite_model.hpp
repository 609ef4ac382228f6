#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace intertwine {

/// Arithmetic in F_q for q prime (q < 256) or q = 4. Elements are the
/// integers 0..q-1: residues for prime q, and for q = 4 the bit patterns of
/// b1*x + b0 modulo x^2 + x + 1.
class Fq {
 public:
  explicit Fq(int q);

  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;  // DomainError on 0
  /// A generator of the multiplicative group.
  int primitive() const { return primitive_; }

  static bool supported(int q);

 private:
  int q_;
  std::vector<int> add_, mul_, neg_, inv_;
  int primitive_ = 1;
};

struct FqMatrix {
  int rows = 0, cols = 0;
  std::vector<int> a;

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static FqMatrix identity(int n);

  int& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  int operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const FqMatrix&) const = default;
};

FqMatrix multiply(const FqMatrix& x, const FqMatrix& y, const Fq& f);
int rank(FqMatrix m, const Fq& f);

/// A d-dimensional subspace of F_q^n, stored as its d x n reduced row-echelon
/// basis (row-major). Ordering is lexicographic in the basis entries.
struct Subspace {
  int d = 0, n = 0;
  std::vector<int> basis;

  auto operator<=>(const Subspace&) const = default;
};

/// Row space of m, re-echelonized.
Subspace row_space(FqMatrix m, const Fq& f);

/// All d-subspaces of F_q^n in lexicographic RREF order.
std::vector<Subspace> enumerate_subspaces(int d, int n, int q);

/// Number of d-subspaces of F_q^n.
mpz_class gaussian_binomial(int n, int d, int q);

/// Right action V -> row-space(basis * g). Hence act(g*h, V) = act(h, act(g, V)).
/// Throws DomainError if g is singular.
Subspace act(const FqMatrix& g, const Subspace& v, const Fq& f);

int intersection_dim(const Subspace& x, const Subspace& y, const Fq& f);

/// Integer matrix with exact entries.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  static ExactMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  ExactMatrix transpose() const;
  bool is_zero() const;
  std::vector<mpz_class> row_sums() const;
  bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  /// "rows cols" on the first line, then one line per row, entries separated by spaces.
  std::string to_text() const;
  static ExactMatrix from_text(std::string_view text);  // ParseError on malformed input

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> e_;
};

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);  // DomainError on shape mismatch

/// Rows indexed by Gr(b, n), columns by Gr(a, n); entry 1 iff V_a is contained in V_b.
ExactMatrix radon_matrix(int a, int b, int n, int q);

/// Rows indexed by Gr(b, n), columns by Gr(a, n); entry 1 iff dim(V_a ∩ V_b) = r.
ExactMatrix incidence_matrix(int a, int b, int n, int q, int r);

/// Transvections I + E_uv (u != v) and diag(alpha, 1, ..., 1) for a primitive alpha.
std::vector<FqMatrix> equivariance_generators(int n, const Fq& f);

struct EquivarianceReport {
  bool equivariant = true;
  std::size_t generators_checked = 0;
  std::size_t first_failure = 0;  // index into equivariance_generators when !equivariant
};

/// Checks P_b(g) T = T P_a(g) for each generator, as T[gW, gV] = T[W, V].
EquivarianceReport equivariance_report(const ExactMatrix& t, int a, int b, int n, int q);
bool check_equivariance(const ExactMatrix& t, int a, int b, int n, int q);

/// Product chain[0] * chain[1] * ... and whether it is nonzero on the all-ones vector.
std::pair<ExactMatrix, bool> compose_and_test_nonzero(const std::vector<ExactMatrix>& chain);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const ExactMatrix& m);

}  // namespace intertwine
