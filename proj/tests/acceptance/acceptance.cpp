// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "intertwine/diffop.hpp"
#include "intertwine/finite_model.hpp"
#include "intertwine/grid.hpp"
#include "intertwine/inductive.hpp"
#include "intertwine/json_io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace intertwine;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t failures = 0;

  void fail(const std::string& what) {
    pass = false;
    if (failures++ < 3) detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::string show(const Quadruple& x) { return to_json(x).dump(); }

CertificateKind kind(const Classification& c) { return kind_of(c.certificate); }

int family_group(CertificateKind k) {
  switch (k) {
    case CertificateKind::Identity:
    case CertificateKind::KnappStein: return 0;
    case CertificateKind::Rank1:
    case CertificateKind::Radon: return 1;
    case CertificateKind::RealCapelli:
    case CertificateKind::ComplexCapelli: return 2;
    case CertificateKind::NoFamily: return 3;
  }
  return 3;
}

const FieldSpec& R = FieldSpec::real();
const FieldSpec& C = FieldSpec::complex();
const FieldSpec& NA = FieldSpec::non_archimedean(3, {2});

constexpr int kRandomSamples = 10000;
constexpr std::uint64_t kSeed = 0x5eed;

void for_each_criterion_two_quadruple(const std::function<void(const Quadruple&)>& visit) {
  for_each_grid_quadruple(R, 6, exponent_grid(R, 0, 3), visit);
  for (const FieldSpec* f : {&C, &NA}) {
    RandomQuadruples random(*f, 6, kSeed);
    for (int t = 0; t < kRandomSamples; ++t) visit(random.next());
  }
}

// 1. Every enumerated family member classifies to dim 1 with its own kind.
Outcome family_completeness() {
  Outcome o;
  std::size_t members = 0;
  for (const FieldSpec* f : {&R, &C, &NA})
    for (int n = 1; n <= 8; ++n)
      enumerate_family(*f, EnumerationBounds{n, 4, 4, kSeed}, [&](const FamilyMember& m) {
        ++members;
        const Classification c = classify(m.quadruple);
        if (c.dim != 1 || kind(c) != kind(m.classification) || !well_formed(c.certificate))
          o.fail(f->name() + " " + show(m.quadruple) + " -> " + to_json(c).dump());
      });
  o.detail = std::to_string(members) + " members" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 2. classify and inductive_classify agree in dim and certificate kind.
Outcome cross_oracle() {
  Outcome o;
  CrossCheckTally tally;
  for_each_criterion_two_quadruple([&](const Quadruple& x) { tally.record(x); });
  for (const auto& d : tally.disagreements)
    o.fail(show(d.quadruple) + ": " + to_json(d.direct).dump() + " vs " + to_json(d.inductive).dump());
  o.detail = std::to_string(tally.checked) + " quadruples" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 3. Twist invariance, central-constraint necessity, derivative stability, duality.
Outcome invariants() {
  Outcome o;
  std::size_t checked = 0, derivative_checked = 0;
  std::mt19937_64 rng(kSeed);
  std::vector<std::vector<CharFx>> twists;
  for (const FieldSpec* f : {&R, &C, &NA}) twists.push_back(character_grid(*f, 2));

  for_each_criterion_two_quadruple([&](const Quadruple& x) {
    ++checked;
    const Classification c = classify(x);
    const auto& pool = twists[static_cast<std::size_t>(x.field().kind())];
    const CharFx& base = pool[rng() % pool.size()];
    const CharFx psi(x.field(), base.s_re(), Rational(1, 3), base.tag());
    const Classification t = classify(twist(x, psi));
    if (t.dim != c.dim || kind(t) != kind(c)) o.fail("twist " + show(x));

    if (c.dim == 1 && !central_constraint(x)) o.fail("central constraint " + show(x));

    const Quadruple dual(GLChar(x.size(2), x[2].chi().inverse()), GLChar(x.size(3), x[3].chi().inverse()),
                         GLChar(x.size(0), x[0].chi().inverse()), GLChar(x.size(1), x[1].chi().inverse()));
    if (classify(dual).dim != c.dim) o.fail("duality " + show(x));

    for (const auto& b : x.blocks())
      if (b.size() < 2) return;
    if (!central_constraint(x)) return;
    ++derivative_checked;
    const Classification d = classify(derivative_quadruple(x));
    if (d.dim == 1 && c.dim != 1) o.fail("derivative lifts " + show(x));
    if (c.dim == 1 && kind(c) != CertificateKind::Rank1) {
      if (d.dim != 1 || family_group(kind(d)) != family_group(kind(c))) o.fail("derivative kind " + show(x));
      if (const auto* r = std::get_if<cert::Radon>(&c.certificate)) {
        const auto* rd = std::get_if<cert::Radon>(&d.certificate);
        if (!rd || rd->which != r->which || rd->k != r->k - 1 || rd->i != r->i || (rd->j != r->j && rd->j != r->j - 1))
          o.fail("derivative radon " + show(x));
      }
    }
  });
  o.detail = std::to_string(checked) + " quadruples, " + std::to_string(derivative_checked) + " derivative checks" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 4. Finite-model equivariance and regression values.
Outcome finite_model() {
  Outcome o;
  std::size_t kernels = 0;
  for (int q : {2, 3})
    for (int n = 1; n <= 4; ++n)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
          const std::string where = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) + "," +
                                    std::to_string(q) + ")";
          if (a < b) {
            ++kernels;
            if (!check_equivariance(radon_matrix(a, b, n, q), a, b, n, q)) o.fail("radon " + where);
          }
          for (int r = 0; r <= std::min(a, b); ++r) {
            ++kernels;
            if (!check_equivariance(incidence_matrix(a, b, n, q, r), a, b, n, q))
              o.fail("incidence r=" + std::to_string(r) + " " + where);
          }
        }
  if (enumerate_subspaces(1, 3, 2).size() != 7 || gaussian_binomial(3, 1, 2) != 7) o.fail("Gr(1,3,2) != 7");
  if (enumerate_subspaces(2, 4, 3).size() != 130 || gaussian_binomial(4, 2, 3) != 130) o.fail("Gr(2,4,3) != 130");
  const ExactMatrix fano = radon_matrix(1, 2, 3, 2);
  if (rank_exact(fano) != 7) o.fail("Fano rank != 7");
  const auto [product, nonzero] = compose_and_test_nonzero({fano, fano.transpose()});
  if (!nonzero) o.fail("composed chain vanishes on constants");
  for (const auto& s : product.row_sums())
    if (s != 9) o.fail("composed constant value " + s.get_str());
  o.detail = std::to_string(kernels) + " kernels" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 5. Bracket fidelity, positive controls, single-exponent perturbations.
Outcome differential_operators() {
  Outcome o;
  std::size_t perturbations = 0;
  for (FieldKind f : {FieldKind::Real, FieldKind::Complex})
    for (int k : {1, 2}) {
      const auto b = bracket_fidelity(f, k);
      if (!b.ok) o.fail("bracket " + std::to_string(k) + " " + b.witness);
    }
  struct Control {
    FieldKind field;
    int k, i, j;
  };
  std::vector<Control> controls;
  for (int k : {1, 2})
    for (int i : {1, 2}) controls.push_back({FieldKind::Real, k, i, 0});
  for (auto [i, j] : {std::pair{1, 0}, {1, 1}, {2, -1}}) controls.push_back({FieldKind::Complex, 1, i, j});

  for (const Control& c : controls) {
    const std::string where = (c.field == FieldKind::Real ? "R" : "C") + std::string(" k=") + std::to_string(c.k) +
                              " i=" + std::to_string(c.i) + " j=" + std::to_string(c.j);
    const auto r = verify_exceptional(c.field, c.k, c.i, c.j, 1);
    if (!r.ok) o.fail("control " + where + " " + r.witness);
    const auto base = exceptional_exponents(c.field, c.i, c.j, 1);
    for (int side = 0; side < 2; ++side)
      for (std::size_t slot = 0; slot < base.chi.size(); ++slot) {
        ExponentData e = base;
        (side ? e.eta : e.chi)[slot] += 1;
        ++perturbations;
        if (verify_intertwining(c.field, c.k, c.i, 1, e).ok)
          o.fail("perturbation " + where + (side ? " eta." : " chi.") + exponent_slots(c.field)[slot]);
      }
  }
  o.detail = std::to_string(controls.size()) + " controls, " + std::to_string(perturbations) + " perturbations" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 6. d pi(E12) = -x^2 d + (s2 - s1 - 1) x, and the multiplier pair (0, -2).
Outcome rank_one_anchor() {
  Outcome o;
  const VarLayout l{1, false, {"s1", "s2"}};
  const MultiPoly s1 = MultiPoly::variable(l.nvars(), l.param(0)), s2 = MultiPoly::variable(l.nvars(), l.param(1));
  const MultiPoly x = MultiPoly::variable(l.nvars(), 0);
  const auto ops = build_cell_action(l, 0, s1, s2);
  PolyDiffOp expected = PolyDiffOp::zero(l);
  expected.add_term({1}, x * x * Rational(-1));
  expected.add_term({0}, (s2 - s1 - MultiPoly::constant(l.nvars(), 1)) * x);
  const PolyDiffOp& e12 = ops[1];
  if (!(e12 == expected)) o.fail("d pi(E12) = " + e12.to_string(l));

  const auto exps = exceptional_exponents(FieldKind::Real, 1);
  const auto multiplier = [&](const std::vector<Rational>& s) {
    const auto op = build_cell_action(1, s[0], s[1])[1];
    const auto it = op.terms().find(Monomial{0});
    if (it == op.terms().end()) return Rational(0);
    const auto c = it->second.terms().find(Monomial{1});
    return c == it->second.terms().end() ? Rational(0) : c->second;
  };
  const Rational c_chi = multiplier(exps.chi), c_eta = multiplier(exps.eta);
  if (c_chi != 0 || c_eta != -2) o.fail("(c_chi, c_eta) = (" + to_string(c_chi) + ", " + to_string(c_eta) + ")");
  if (!verify_exceptional(FieldKind::Real, 1, 1).ok) o.fail("d does not intertwine");
  o.detail = "d pi(E12) = " + e12.to_string(l) + "; (c_chi, c_eta) = (" + to_string(c_chi) + ", " +
             to_string(c_eta) + ")" + (o.pass ? "" : "; " + o.detail);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "family completeness", 120, family_completeness},
      {2, "cross-oracle agreement", 300, cross_oracle},
      {3, "invariance suite", 0, invariants},
      {4, "finite-model equivariance", 180, finite_model},
      {5, "differential-operator verification", 60, differential_operators},
      {6, "rank-one anchor", 0, rank_one_anchor},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) o.fail("over time limit");
    all = all && o.pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") " << seconds
         << "s";
    if (c.limit_seconds > 0) line << " / " << c.limit_seconds << "s";
    if (!o.detail.empty()) line << " : " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
