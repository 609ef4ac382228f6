#include "intertwine/finite_model.hpp"

#include "intertwine/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace intertwine {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Gauss-Jordan in place; returns the pivot columns.
std::vector<int> reduce(FqMatrix& m, const Fq& f) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = row;
    while (p < m.rows && m(p, col) == 0) ++p;
    if (p == m.rows) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m(p, c), m(row, c));
    const int s = f.inv(m(row, col));
    for (int c = 0; c < m.cols; ++c) m(row, c) = f.mul(s, m(row, c));
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const int t = m(r, col);
      for (int c = 0; c < m.cols; ++c) m(r, c) = f.sub(m(r, c), f.mul(t, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

FqMatrix as_matrix(const Subspace& v) {
  FqMatrix m(v.d, v.n);
  m.a = v.basis;
  return m;
}

std::size_t index_of(const std::vector<Subspace>& sorted, const Subspace& v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  return static_cast<std::size_t>(it - sorted.begin());
}

void check_dims(int a, int b, int n) {
  if (n < 0 || a < 0 || b < 0 || a > n || b > n)
    throw DomainError("subspace dimensions out of range");
}

template <class Pred>
ExactMatrix kernel_matrix(int a, int b, int n, int q, Pred pred) {
  const Fq f(q);
  const auto cols = enumerate_subspaces(a, n, q);
  const auto rows = enumerate_subspaces(b, n, q);
  ExactMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (pred(rows[r], cols[c], f)) m(r, c) = 1;
  return m;
}

}  // namespace

bool Fq::supported(int q) { return (is_prime(q) && q < 256) || q == 4; }

Fq::Fq(int q) : q_(q) {
  if (!supported(q)) throw DomainError("unsupported field size q=" + std::to_string(q));
  const auto qq = static_cast<std::size_t>(q) * q;
  add_.resize(qq);
  mul_.resize(qq);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      int s, p;
      if (q == 4) {
        s = a ^ b;
        // (a1 x + a0)(b1 x + b0) with x^2 = x + 1
        const int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
        const int hi = a1 & b1;
        const int c1 = ((a1 & b0) ^ (a0 & b1) ^ hi);
        const int c0 = (a0 & b0) ^ hi;
        p = (c1 << 1) | c0;
      } else {
        s = (a + b) % q;
        p = (a * b) % q;
      }
      add_[a * q + b] = s;
      mul_[a * q + b] = p;
      if (s == 0) neg_[a] = b;
      if (p == 1) inv_[a] = b;
    }
  for (int g = 1; g < q; ++g) {
    int x = g, order = 1;
    while (x != 1) {
      x = mul(x, g);
      ++order;
    }
    if (order == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

int Fq::inv(int a) const {
  if (a == 0) throw DomainError("division by zero in F_q");
  return inv_[a];
}

FqMatrix FqMatrix::identity(int n) {
  FqMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqMatrix multiply(const FqMatrix& x, const FqMatrix& y, const Fq& f) {
  if (x.cols != y.rows) throw DomainError("matrix shape mismatch");
  FqMatrix out(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      const int s = x(r, k);
      if (s == 0) continue;
      for (int c = 0; c < y.cols; ++c) out(r, c) = f.add(out(r, c), f.mul(s, y(k, c)));
    }
  return out;
}

int rank(FqMatrix m, const Fq& f) { return static_cast<int>(reduce(m, f).size()); }

Subspace row_space(FqMatrix m, const Fq& f) {
  const auto pivots = reduce(m, f);
  Subspace v{static_cast<int>(pivots.size()), m.cols, {}};
  v.basis.assign(m.a.begin(), m.a.begin() + static_cast<std::ptrdiff_t>(v.d) * m.cols);
  return v;
}

std::vector<Subspace> enumerate_subspaces(int d, int n, int q) {
  if (d < 0 || n < 0 || d > n) throw DomainError("enumerate_subspaces needs 0 <= d <= n");
  const Fq f(q);
  std::vector<Subspace> out;
  std::vector<bool> choose(static_cast<std::size_t>(n), false);
  std::fill(choose.begin(), choose.begin() + d, true);
  do {
    std::vector<int> pivots;
    for (int c = 0; c < n; ++c)
      if (choose[static_cast<std::size_t>(c)]) pivots.push_back(c);
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < d; ++r)
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
        if (!choose[static_cast<std::size_t>(c)]) free.emplace_back(r, c);
    Subspace v{d, n, std::vector<int>(static_cast<std::size_t>(d) * n, 0)};
    for (int r = 0; r < d; ++r) v.basis[static_cast<std::size_t>(r) * n + pivots[static_cast<std::size_t>(r)]] = 1;
    // odometer over the free entries
    std::vector<int> digits(free.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free.size(); ++t)
        v.basis[static_cast<std::size_t>(free[t].first) * n + free[t].second] = digits[t];
      out.push_back(v);
      std::size_t t = 0;
      while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
      if (t == digits.size()) break;
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class gaussian_binomial(int n, int d, int q) {
  if (d < 0 || d > n) return 0;
  mpz_class num = 1, den = 1, qq = q;
  for (int l = 0; l < d; ++l) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(n - l));
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(d - l));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

Subspace act(const FqMatrix& g, const Subspace& v, const Fq& f) {
  if (g.rows != v.n || g.cols != v.n) throw DomainError("act: g has the wrong size");
  if (rank(g, f) != g.rows) throw DomainError("act: g is singular");
  return row_space(multiply(as_matrix(v), g, f), f);
}

int intersection_dim(const Subspace& x, const Subspace& y, const Fq& f) {
  FqMatrix m(x.d + y.d, x.n);
  std::copy(x.basis.begin(), x.basis.end(), m.a.begin());
  std::copy(y.basis.begin(), y.basis.end(), m.a.begin() + static_cast<std::ptrdiff_t>(x.basis.size()));
  return x.d + y.d - rank(std::move(m), f);
}

ExactMatrix ExactMatrix::ones(std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (auto& e : m.e_) e = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const mpz_class& x) { return x == 0; });
}

std::vector<mpz_class> ExactMatrix::row_sums() const {
  std::vector<mpz_class> s(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s[r] += (*this)(r, c);
  return s;
}

std::string ExactMatrix::to_text() const {
  std::ostringstream out;
  out << rows_ << ' ' << cols_ << '\n';
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c).get_str();
    out << '\n';
  }
  return out.str();
}

ExactMatrix ExactMatrix::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw ParseError("expected 'rows cols' header", 0);
  ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (auto& e : m.e_) {
    std::string tok;
    if (!(in >> tok)) throw ParseError("matrix text ends early", static_cast<std::size_t>(in.tellg() < 0 ? text.size() : static_cast<std::size_t>(in.tellg())));
    if (e.set_str(tok, 10) != 0) throw ParseError("bad matrix entry '" + tok + "'", static_cast<std::size_t>(in.tellg()) - tok.size());
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data after matrix", static_cast<std::size_t>(in.tellg()) - extra.size());
  return m;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.cols() != y.rows()) throw DomainError("matrix shape mismatch in product");
  ExactMatrix out(x.rows(), y.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(r, k) == 0) continue;
      for (std::size_t c = 0; c < y.cols(); ++c) out(r, c) += x(r, k) * y(k, c);
    }
  return out;
}

ExactMatrix radon_matrix(int a, int b, int n, int q) {
  check_dims(a, b, n);
  if (a >= b) throw DomainError("radon_matrix needs a < b");
  return kernel_matrix(a, b, n, q,
                       [a](const Subspace& vb, const Subspace& va, const Fq& f) { return intersection_dim(vb, va, f) == a; });
}

ExactMatrix incidence_matrix(int a, int b, int n, int q, int r) {
  check_dims(a, b, n);
  if (r < 0 || r > std::min(a, b)) throw DomainError("incidence_matrix needs 0 <= r <= min(a, b)");
  return kernel_matrix(a, b, n, q,
                       [r](const Subspace& vb, const Subspace& va, const Fq& f) { return intersection_dim(vb, va, f) == r; });
}

std::vector<FqMatrix> equivariance_generators(int n, const Fq& f) {
  std::vector<FqMatrix> gens;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) {
        auto g = FqMatrix::identity(n);
        g(u, v) = 1;
        gens.push_back(std::move(g));
      }
  if (n >= 1 && f.q() > 2) {
    auto g = FqMatrix::identity(n);
    g(0, 0) = f.primitive();
    gens.push_back(std::move(g));
  }
  return gens;
}

EquivarianceReport equivariance_report(const ExactMatrix& t, int a, int b, int n, int q) {
  check_dims(a, b, n);
  const Fq f(q);
  const auto cols = enumerate_subspaces(a, n, q);
  const auto rows = enumerate_subspaces(b, n, q);
  if (t.rows() != rows.size() || t.cols() != cols.size())
    throw DomainError("matrix is not indexed by (Gr(b), Gr(a))");

  EquivarianceReport report;
  const auto gens = equivariance_generators(n, f);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::vector<std::size_t> sigma_a(cols.size()), sigma_b(rows.size());
    for (std::size_t c = 0; c < cols.size(); ++c) sigma_a[c] = index_of(cols, act(gens[gi], cols[c], f));
    for (std::size_t r = 0; r < rows.size(); ++r) sigma_b[r] = index_of(rows, act(gens[gi], rows[r], f));
    ++report.generators_checked;
    for (std::size_t r = 0; r < rows.size() && report.equivariant; ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (t(sigma_b[r], sigma_a[c]) != t(r, c)) {
          report.equivariant = false;
          report.first_failure = gi;
          break;
        }
    if (!report.equivariant) break;
  }
  return report;
}

bool check_equivariance(const ExactMatrix& t, int a, int b, int n, int q) {
  return equivariance_report(t, a, b, n, q).equivariant;
}

std::pair<ExactMatrix, bool> compose_and_test_nonzero(const std::vector<ExactMatrix>& chain) {
  if (chain.empty()) throw DomainError("empty operator chain");
  ExactMatrix product = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) product = product * chain[i];
  const auto sums = product.row_sums();
  const bool nonzero = std::any_of(sums.begin(), sums.end(), [](const mpz_class& s) { return s != 0; });
  return {std::move(product), nonzero};
}

std::size_t rank_exact(const ExactMatrix& input) {
  ExactMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(p, c), m(rank, c));
    const mpz_class pivot = m(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class lead = m(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class v = m(r, c) * pivot - lead * m(rank, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(r, c) = std::move(v);
      }
      m(r, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace intertwine
