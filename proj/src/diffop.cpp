#include "intertwine/diffop.hpp"

#include "intertwine/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace intertwine {

namespace {

int total(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Rational falling(int n, int r) {
  Rational out = 1;
  for (int t = 0; t < r; ++t) out *= n - t;
  return out;
}

Rational binomial(int n, int r) {
  Rational out = 1;
  for (int t = 1; t <= r; ++t) out = out * (n - r + t) / t;
  return out;
}

std::string coefficient_prefix(const Rational& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return to_string(c) + "*";
}

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

PolyMatrix matmul(const PolyMatrix& x, const PolyMatrix& y, std::size_t nv) {
  const std::size_t n = x.size(), m = y.front().size(), inner = y.size();
  PolyMatrix out(n, std::vector<MultiPoly>(m, MultiPoly(nv)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t t = 0; t < inner; ++t) out[r][c] = out[r][c] + x[r][t] * y[t][c];
  return out;
}

PolyMatrix constant_block(const RatMatrix& x, int r0, int c0, int k, std::size_t nv) {
  PolyMatrix out(static_cast<std::size_t>(k), std::vector<MultiPoly>(static_cast<std::size_t>(k), MultiPoly(nv)));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) out[r][c] = MultiPoly::constant(nv, x[r0 + r][c0 + c]);
  return out;
}

MultiPoly trace(const PolyMatrix& x, std::size_t nv) {
  MultiPoly t(nv);
  for (std::size_t a = 0; a < x.size(); ++a) t = t + x[a][a];
  return t;
}

MultiPoly determinant(const PolyMatrix& x, std::size_t nv) {
  const std::size_t k = x.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det(nv);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    MultiPoly term = MultiPoly::constant(nv, inversions % 2 ? -1 : 1);
    for (std::size_t a = 0; a < k; ++a) term = term * x[a][perm[a]];
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t t = c; t < n; ++t) m[r][t] -= f * m[c][t];
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m, inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw DomainError("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational s = a[c][c];
    for (std::size_t t = 0; t < n; ++t) {
      a[c][t] /= s;
      inv[c][t] /= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t t = 0; t < n; ++t) {
        a[r][t] -= f * a[c][t];
        inv[r][t] -= f * inv[c][t];
      }
    }
  }
  return inv;
}

PolyMatrix cell_variables(const VarLayout& layout, int copy) {
  const int k = layout.k;
  PolyMatrix x(static_cast<std::size_t>(k), std::vector<MultiPoly>(static_cast<std::size_t>(k), MultiPoly(layout.nvars())));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) x[a][b] = MultiPoly::variable(layout.nvars(), layout.index(copy, a, b));
  return x;
}

}  // namespace

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const int da = total(a), db = total(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string VarLayout::name(std::size_t var) const {
  if (var >= nderiv()) return params.at(var - nderiv());
  const int kk = k * k;
  const int copy = static_cast<int>(var) / kk, rest = static_cast<int>(var) % kk;
  std::string base = copy ? "xb" : "x";
  if (k == 1) return base;
  return base + std::to_string(rest / k + 1) + std::to_string(rest % k + 1);
}

MultiPoly MultiPoly::constant(std::size_t nvars, Rational c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
  MultiPoly p(nvars);
  Monomial m(nvars, 0);
  m.at(var) = 1;
  p.add_term(m, 1);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total(m));
  return d;
}

void MultiPoly::add_term(const Monomial& m, Rational c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out(nvars_);
  Monomial m(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t v = 0; v < nvars_; ++v) m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator*(Rational c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace(m, a * c);
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly out = constant(nvars_, 1);
  for (int t = 0; t < e; ++t) out = out * *this;
  return out;
}

MultiPoly MultiPoly::partial(const Monomial& gamma) const {
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    Rational f = c;
    bool vanishes = false;
    for (std::size_t v = 0; v < gamma.size() && !vanishes; ++v) {
      if (r[v] < gamma[v]) vanishes = true;
      else {
        f *= falling(r[v], gamma[v]);
        r[v] -= gamma[v];
      }
    }
    if (!vanishes) out.add_term(r, f);
  }
  return out;
}

std::string MultiPoly::to_string(const VarLayout& layout) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += layout.name(v);
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    std::string term = mono.empty() ? intertwine::to_string(c) : coefficient_prefix(c) + mono;
    if (out.empty()) out = term;
    else if (term.front() == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

PolyDiffOp PolyDiffOp::multiplication(const VarLayout& l, const MultiPoly& p) {
  PolyDiffOp d(l.nvars(), l.nderiv());
  d.add_term(Monomial(l.nderiv(), 0), p);
  return d;
}

PolyDiffOp PolyDiffOp::derivative(const VarLayout& l, std::size_t var) {
  PolyDiffOp d(l.nvars(), l.nderiv());
  Monomial alpha(l.nderiv(), 0);
  alpha.at(var) = 1;
  d.add_term(alpha, MultiPoly::constant(l.nvars(), 1));
  return d;
}

int PolyDiffOp::order() const {
  int o = -1;
  for (const auto& [a, c] : terms_) o = std::max(o, total(a));
  return o;
}

void PolyDiffOp::add_term(const Monomial& alpha, const MultiPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (inserted) return;
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyDiffOp PolyDiffOp::operator+(const PolyDiffOp& o) const {
  PolyDiffOp out = *this;
  for (const auto& [a, c] : o.terms_) out.add_term(a, c);
  return out;
}

PolyDiffOp PolyDiffOp::operator-(const PolyDiffOp& o) const { return *this + o * Rational(-1); }

PolyDiffOp PolyDiffOp::operator*(Rational c) const {
  PolyDiffOp out(nvars_, nderiv_);
  for (const auto& [a, p] : terms_) out.add_term(a, p * c);
  return out;
}

std::string PolyDiffOp::to_string(const VarLayout& layout) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [alpha, coeff] = *it;
    std::string d;
    for (std::size_t v = 0; v < alpha.size(); ++v) {
      if (alpha[v] == 0) continue;
      d += "*d[" + layout.name(v) + "]";
      if (alpha[v] > 1) d += "^" + std::to_string(alpha[v]);
    }
    if (!out.empty()) out += " + ";
    out += "(" + coeff.to_string(layout) + ")" + d;
  }
  return out;
}

PolyDiffOp compose(const PolyDiffOp& d1, const PolyDiffOp& d2) {
  if (d1.nvars() != d2.nvars() || d1.nderiv() != d2.nderiv())
    throw DomainError("compose: operators live on different variable sets");
  const std::size_t nd = d1.nderiv();
  PolyDiffOp out(d1.nvars(), nd);
  for (const auto& [alpha, a] : d1.terms())
    for (const auto& [beta, b] : d2.terms()) {
      // d^alpha (b d^beta) = sum_{gamma <= alpha} C(alpha, gamma) (d^gamma b) d^{alpha - gamma + beta}
      Monomial gamma(nd, 0);
      while (true) {
        Rational weight = 1;
        Monomial rest(nd);
        for (std::size_t v = 0; v < nd; ++v) {
          weight *= binomial(alpha[v], gamma[v]);
          rest[v] = alpha[v] - gamma[v] + beta[v];
        }
        const MultiPoly db = b.partial(gamma);
        if (!db.is_zero()) out.add_term(rest, a * db * weight);
        std::size_t v = 0;
        while (v < nd && ++gamma[v] > alpha[v]) gamma[v++] = 0;
        if (v == nd) break;
      }
    }
  return out;
}

PolyDiffOp commutator(const PolyDiffOp& d1, const PolyDiffOp& d2) { return compose(d1, d2) - compose(d2, d1); }

RatMatrix elementary(int k, int u, int v) {
  RatMatrix e(static_cast<std::size_t>(2 * k), std::vector<Rational>(static_cast<std::size_t>(2 * k), 0));
  e.at(static_cast<std::size_t>(u)).at(static_cast<std::size_t>(v)) = 1;
  return e;
}

std::string basis_name(int u, int v, bool conjugate_copy) {
  return std::string(conjugate_copy ? "Ebar" : "E") + std::to_string(u + 1) + std::to_string(v + 1);
}

PolyDiffOp cell_operator(const VarLayout& layout, int copy, const RatMatrix& x, const MultiPoly& s1,
                         const MultiPoly& s2) {
  const int k = layout.k;
  const std::size_t nv = layout.nvars();
  const PolyMatrix cell = cell_variables(layout, copy);
  const PolyMatrix x11 = constant_block(x, 0, 0, k, nv), x12 = constant_block(x, 0, k, k, nv);
  const PolyMatrix x21 = constant_block(x, k, 0, k, nv), x22 = constant_block(x, k, k, k, nv);

  const PolyMatrix a = matmul(cell, x11, nv), b = matmul(x22, cell, nv);
  const PolyMatrix c = matmul(matmul(cell, x12, nv), cell, nv);
  PolyDiffOp op = PolyDiffOp::zero(layout);
  for (int r = 0; r < k; ++r)
    for (int t = 0; t < k; ++t) {
      const MultiPoly field = x21[r][t] + a[r][t] - b[r][t] - c[r][t];
      op = op + compose(PolyDiffOp::multiplication(layout, field),
                        PolyDiffOp::derivative(layout, layout.index(copy, r, t)));
    }

  Rational tr_x = 0;
  for (int t = 0; t < 2 * k; ++t) tr_x += x[t][t];
  const MultiPoly tau = trace(matmul(cell, x12, nv), nv) + trace(x22, nv);
  const Rational half_k(k, 2);
  const MultiPoly m = (s1 + MultiPoly::constant(nv, half_k)) * (MultiPoly::constant(nv, tr_x) - tau) +
                      (s2 - MultiPoly::constant(nv, half_k)) * tau;
  return op + PolyDiffOp::multiplication(layout, m);
}

std::vector<PolyDiffOp> build_cell_action(const VarLayout& layout, int copy, const MultiPoly& s1,
                                          const MultiPoly& s2) {
  std::vector<PolyDiffOp> out;
  const int dim = 2 * layout.k;
  for (int u = 0; u < dim; ++u)
    for (int v = 0; v < dim; ++v) out.push_back(cell_operator(layout, copy, elementary(layout.k, u, v), s1, s2));
  return out;
}

std::vector<PolyDiffOp> build_cell_action(int k, Rational s1, Rational s2) {
  if (k < 1) throw DomainError("build_cell_action needs k >= 1");
  const VarLayout layout{k, false, {}};
  return build_cell_action(layout, 0, MultiPoly::constant(layout.nvars(), s1), MultiPoly::constant(layout.nvars(), s2));
}

PolyDiffOp det_partial_power(const VarLayout& layout, int copy, int i) {
  if (i < 1) throw DomainError("det_partial_power needs i >= 1");
  const std::size_t k = static_cast<std::size_t>(layout.k);
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  PolyDiffOp det = PolyDiffOp::zero(layout);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Monomial alpha(layout.nderiv(), 0);
    for (std::size_t a = 0; a < k; ++a)
      ++alpha[layout.index(copy, static_cast<int>(a), static_cast<int>(perm[a]))];
    det.add_term(alpha, MultiPoly::constant(layout.nvars(), inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  PolyDiffOp out = det;
  for (int t = 1; t < i; ++t) out = compose(out, det);
  return out;
}

PolyDiffOp det_partial_power(int k, int i) {
  if (k < 1) throw DomainError("det_partial_power needs k >= 1");
  return det_partial_power(VarLayout{k, false, {}}, 0, i);
}

BracketReport bracket_fidelity(FieldKind field, int k) {
  if (field == FieldKind::NonArch) throw DomainError("the cell action is defined over R and C only");
  const bool complex = field == FieldKind::Complex;
  const VarLayout layout = complex ? VarLayout{k, true, {"a1", "a2", "b1", "b2"}} : VarLayout{k, false, {"s1", "s2"}};
  const std::size_t nv = layout.nvars();
  std::vector<std::vector<PolyDiffOp>> copies;
  for (int copy = 0; copy < layout.copies(); ++copy)
    copies.push_back(build_cell_action(layout, copy, MultiPoly::variable(nv, layout.param(2 * copy)),
                                       MultiPoly::variable(nv, layout.param(2 * copy + 1))));

  BracketReport report;
  const int dim = 2 * k;
  auto at = [dim](int u, int v) { return static_cast<std::size_t>(u * dim + v); };
  for (int c1 = 0; c1 < layout.copies(); ++c1)
    for (int c2 = 0; c2 < layout.copies(); ++c2)
      for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v)
          for (int w = 0; w < dim; ++w)
            for (int z = 0; z < dim; ++z) {
              const PolyDiffOp lhs = commutator(copies[c1][at(u, v)], copies[c2][at(w, z)]);
              PolyDiffOp rhs = PolyDiffOp::zero(layout);
              if (c1 == c2) {
                if (v == w) rhs = rhs + copies[c1][at(u, z)];
                if (z == u) rhs = rhs - copies[c1][at(w, v)];
              }
              ++report.pairs_checked;
              if (!(lhs == rhs)) {
                report.ok = false;
                report.witness = "[" + basis_name(u, v, c1 == 1) + "," + basis_name(w, z, c2 == 1) + "]";
                return report;
              }
            }
  return report;
}

ExponentData exceptional_exponents(FieldKind field, int i, int j, int variant) {
  if (field == FieldKind::Real) return {{0, i}, {i, 0}};
  if (field != FieldKind::Complex) throw DomainError("exceptional patterns exist over R and C only");
  if (variant == 1) return {{0, i, 0, j}, {i, 0, 0, j}};
  if (variant == 2) return {{0, j, 0, i}, {0, j, i, 0}};
  throw DomainError("variant must be 1 or 2");
}

std::vector<std::string> exponent_slots(FieldKind field) {
  if (field == FieldKind::Complex) return {"a1", "a2", "b1", "b2"};
  return {"s1", "s2"};
}

DiffopReport verify_intertwining(FieldKind field, int k, int i, int variant, const ExponentData& exps) {
  if (k < 1 || i < 1) throw DomainError("verify_exceptional needs k >= 1 and i >= 1");
  if (field == FieldKind::NonArch) throw DomainError("the cell action is defined over R and C only");
  const bool complex = field == FieldKind::Complex;
  const VarLayout layout{k, complex, {}};
  const std::size_t slots = complex ? 4 : 2;
  if (exps.chi.size() != slots || exps.eta.size() != slots) throw DomainError("wrong number of exponents");
  const std::size_t nv = layout.nvars();
  const int d_copy = complex && variant == 2 ? 1 : 0;
  const PolyDiffOp d = det_partial_power(layout, d_copy, i);

  DiffopReport report;
  const int dim = 2 * k;
  for (int copy = 0; copy < layout.copies(); ++copy) {
    const auto c = static_cast<std::size_t>(2 * copy);
    const auto chi = build_cell_action(layout, copy, MultiPoly::constant(nv, exps.chi[c]),
                                       MultiPoly::constant(nv, exps.chi[c + 1]));
    const auto eta = build_cell_action(layout, copy, MultiPoly::constant(nv, exps.eta[c]),
                                       MultiPoly::constant(nv, exps.eta[c + 1]));
    for (int u = 0; u < dim; ++u)
      for (int v = 0; v < dim; ++v) {
        const auto e = static_cast<std::size_t>(u * dim + v);
        const PolyDiffOp residue = compose(d, chi[e]) - compose(eta[e], d);
        ++report.checked;
        if (!residue.is_zero()) {
          report.ok = false;
          report.witness = basis_name(u, v, copy == 1);
          report.residue = residue.to_string(layout);
          return report;
        }
      }
  }
  return report;
}

DiffopReport verify_exceptional(FieldKind field, int k, int i, int j, int variant) {
  return verify_intertwining(field, k, i, variant, exceptional_exponents(field, i, j, variant));
}

bool verify_adjoint_covariance(int k, int i, int trials, std::uint64_t seed) {
  if (k < 1 || i < 1) throw DomainError("verify_adjoint_covariance needs k >= 1 and i >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  auto draw = [&] {
    while (true) {
      RatMatrix m(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
      for (auto& row : m)
        for (auto& e : row) e = Rational(num(rng), den(rng));
      if (determinant(m) != 0) return m;
    }
  };
  const VarLayout layout{k, false, {}};
  const std::size_t nv = layout.nvars();
  auto lift = [&](const RatMatrix& m) {
    PolyMatrix p(m.size(), std::vector<MultiPoly>(m.size(), MultiPoly(nv)));
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c) p[r][c] = MultiPoly::constant(nv, m[r][c]);
    return p;
  };
  const PolyMatrix x = cell_variables(layout, 0);
  const MultiPoly det_x = determinant(x, nv).pow(i);
  for (int t = 0; t < trials; ++t) {
    const RatMatrix a = draw(), b = draw();
    const MultiPoly lhs = determinant(matmul(matmul(lift(a), x, nv), lift(inverse(b)), nv), nv).pow(i);
    Rational scale = 1;
    const Rational ratio = determinant(a) / determinant(b);
    for (int e = 0; e < i; ++e) scale *= ratio;
    if (!(lhs == det_x * scale)) return false;
  }
  return true;
}

}  // namespace intertwine
