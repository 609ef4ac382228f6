#include "commands.hpp"

#include "intertwine/diffop.hpp"
#include "intertwine/errors.hpp"
#include "intertwine/finite_model.hpp"
#include "intertwine/grid.hpp"
#include "intertwine/inductive.hpp"
#include "intertwine/json_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace intertwine::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 0x5eed;
constexpr std::size_t kMaxListedDisagreements = 20;

struct Global {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir;
};

class Output {
 public:
  Output(const Global& g, std::ostream& out) : g_(g), out_(out) {}

  void emit(const std::string& name, const json& report, const std::string& human) {
    if (g_.format == "human") out_ << human;
    else out_ << report.dump(2) << '\n';
    write(name + ".json", report.dump(2) + "\n");
  }

  void write(const std::string& file, const std::string& content) {
    if (g_.out_dir.empty()) return;
    std::filesystem::create_directories(g_.out_dir);
    std::ofstream f(std::filesystem::path(g_.out_dir) / file);
    if (!f) throw Error("cannot write " + file + " in " + g_.out_dir);
    f << content;
  }

 private:
  const Global& g_;
  std::ostream& out_;
};

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_fraction_string(r));
  return a;
}

std::string human_classification(const Classification& c) {
  std::ostringstream s;
  s << "dim " << c.dim << ": " << describe(c.certificate) << '\n';
  if (c.dim == 1) s << "twist: " << render(c.twist) << '\n';
  return s.str();
}

// --- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string field = "R";
  std::vector<std::string> blocks;
  bool inductive = false;
};

int run_classify(const ClassifyArgs& a, Output& out) {
  const FieldSpec& field = parse_field(a.field);
  std::vector<GLChar> b;
  for (const auto& text : a.blocks) b.push_back(parse_char(text, field));
  const Quadruple x(b[0], b[1], b[2], b[3]);
  const Classification c = a.inductive ? inductive_classify(x) : classify(x);
  out.emit("classify", to_json(c), human_classification(c));
  return kOk;
}

// --- enumerate --------------------------------------------------------------

struct EnumerateArgs {
  std::string field = "R";
  int n = 2;
  std::string exponent_bound = "1";
  int param_bound = 1;
  bool count_only = false;
};

int run_enumerate(const EnumerateArgs& a, const Global& g, Output& out) {
  const FieldSpec& field = parse_field(a.field);
  const EnumerationBounds bounds{a.n, parse_rational(a.exponent_bound), a.param_bound, g.seed};
  json members = json::array();
  std::ostringstream human;
  std::size_t count = 0;
  enumerate_family(field, bounds, [&](const FamilyMember& m) {
    ++count;
    if (a.count_only) return;
    members.push_back({{"quadruple", to_json(m.quadruple)}, {"classification", to_json(m.classification)}});
    for (const auto& b : m.quadruple.blocks()) human << render(b) << "  ";
    human << "=> " << describe(m.classification.certificate) << '\n';
  });
  json report{{"field", field.name()}, {"n", a.n}, {"count", count}, {"seed", g.seed}};
  if (!a.count_only) report["members"] = std::move(members);
  human << count << " members\n";
  out.emit("enumerate", report, human.str());
  return kOk;
}

// --- verify-finite ----------------------------------------------------------

struct FiniteArgs {
  int n = 3;
  int q = 2;
  std::vector<int> radon;
  std::vector<int> incidence;
  bool compose = false;
};

std::string generator_name(const FqMatrix& g) {
  for (int u = 0; u < g.rows; ++u)
    for (int v = 0; v < g.cols; ++v)
      if (u != v && g(u, v) != 0) return "I+E" + std::to_string(u + 1) + std::to_string(v + 1);
  std::string s = "diag(";
  for (int u = 0; u < g.rows; ++u) s += (u ? "," : "") + std::to_string(g(u, u));
  return s + ")";
}

json constant_or_null(const std::vector<mpz_class>& values) {
  if (values.empty()) return nullptr;
  for (const auto& v : values)
    if (v != values.front()) return nullptr;
  return values.front().get_si();
}

int run_verify_finite(const FiniteArgs& a, Output& out) {
  if (a.radon.empty() == a.incidence.empty()) throw DomainError("give exactly one of --radon or --incidence");
  const bool radon = !a.radon.empty();
  const int lo = radon ? a.radon[0] : a.incidence[0], hi = radon ? a.radon[1] : a.incidence[1];
  const ExactMatrix t = radon ? radon_matrix(lo, hi, a.n, a.q) : incidence_matrix(lo, hi, a.n, a.q, a.incidence[2]);
  const auto eq = equivariance_report(t, lo, hi, a.n, a.q);
  const auto gens = equivariance_generators(a.n, Fq(a.q));

  json names = json::array();
  for (std::size_t g = 0; g < eq.generators_checked; ++g) names.push_back(generator_name(gens[g]));
  const std::size_t rank = rank_exact(t);
  json report{{"kind", radon ? "radon" : "incidence"},
              {"a", lo},
              {"b", hi},
              {"n", a.n},
              {"q", a.q},
              {"rows", t.rows()},
              {"cols", t.cols()},
              {"rank", rank},
              {"rank_transpose", rank_exact(t.transpose())},
              {"rowsum", constant_or_null(t.row_sums())},
              {"equivariant", eq.equivariant},
              {"generators", names}};
  if (!radon) report["r"] = a.incidence[2];
  if (!eq.equivariant) report["failing_generator"] = generator_name(gens[eq.first_failure]);

  std::ostringstream human;
  human << (radon ? "radon" : "incidence") << " matrix " << t.rows() << "x" << t.cols() << ", rank " << rank
        << ", equivariant " << (eq.equivariant ? "yes" : "no") << " (" << eq.generators_checked << " generators)\n";
  bool composed_ok = true;
  if (a.compose) {
    const auto [product, nonzero] = compose_and_test_nonzero({t, t.transpose()});
    const json value = constant_or_null(product.row_sums());
    report["composed"] = {{"nonzero_on_constants", nonzero}, {"value", value}, {"rank", rank_exact(product)}};
    human << "T*T^t on constants: " << (nonzero ? "nonzero" : "zero") << '\n';
    composed_ok = nonzero;
  }
  std::ostringstream file;
  file << (radon ? "radon" : "incidence") << '_' << lo << '_' << hi;
  if (!radon) file << '_' << a.incidence[2];
  file << '_' << a.n << '_' << a.q << ".txt";
  out.write(file.str(), t.to_text());
  out.emit("verify-finite", report, human.str());
  return eq.equivariant && composed_ok ? kOk : kCheckFailed;
}

// --- verify-diffop ----------------------------------------------------------

struct DiffopArgs {
  std::string field = "R";
  int k = 1;
  int i = 1;
  int j = 0;
  int variant = 1;
  std::vector<std::string> perturb;
  std::string perturb_by = "1";
  int trials = 3;
};

void apply_perturbation(ExponentData& e, FieldKind kind, const std::string& spec, Rational delta) {
  std::string slot = spec;
  bool chi = false;
  if (slot.rfind("chi.", 0) == 0) {
    chi = true;
    slot = slot.substr(4);
  } else if (slot.rfind("eta.", 0) == 0) {
    slot = slot.substr(4);
  }
  const auto names = exponent_slots(kind);
  const auto it = std::find(names.begin(), names.end(), slot);
  if (it == names.end()) throw ParseError("unknown exponent slot '" + spec + "'", 0);
  auto& target = chi ? e.chi : e.eta;
  target[static_cast<std::size_t>(it - names.begin())] += delta;
}

int run_verify_diffop(const DiffopArgs& a, const Global& g, Output& out) {
  const FieldSpec& field = parse_field(a.field);
  const FieldKind kind = field.kind();
  if (kind == FieldKind::NonArch) throw DomainError("verify-diffop needs --field R or C");
  if (kind == FieldKind::Real && (a.j != 0 || a.variant != 1)) throw DomainError("--j and --variant apply over C only");
  ExponentData exps = exceptional_exponents(kind, a.i, a.j, a.variant);
  const Rational delta = parse_rational(a.perturb_by);
  for (const auto& p : a.perturb) apply_perturbation(exps, kind, p, delta);

  const DiffopReport r = verify_intertwining(kind, a.k, a.i, a.variant, exps);
  const BracketReport br = bracket_fidelity(kind, a.k);
  const bool adjoint = verify_adjoint_covariance(a.k, a.i, a.trials, g.seed);
  json report{{"field", field.name()},
              {"k", a.k},
              {"i", a.i},
              {"ok", r.ok},
              {"checked", r.checked},
              {"chi", rationals(exps.chi)},
              {"eta", rationals(exps.eta)},
              {"slots", exponent_slots(kind)},
              {"bracket", {{"ok", br.ok}, {"pairs", br.pairs_checked}}},
              {"adjoint_covariance", adjoint}};
  if (kind == FieldKind::Complex) {
    report["j"] = a.j;
    report["variant"] = a.variant;
  }
  if (!r.ok) {
    report["witness"] = r.witness;
    report["residue"] = r.residue;
  }
  if (!br.ok) report["bracket"]["witness"] = br.witness;

  std::ostringstream human;
  human << "intertwining: " << (r.ok ? "ok" : "FAILED at " + r.witness) << " (" << r.checked << " basis elements)\n";
  if (!r.ok) human << "residue: " << r.residue << '\n';
  human << "bracket fidelity: " << (br.ok ? "ok" : "FAILED at " + br.witness) << '\n';
  human << "adjoint covariance: " << (adjoint ? "ok" : "FAILED") << '\n';
  out.emit("verify-diffop", report, human.str());
  return r.ok && br.ok && adjoint ? kOk : kCheckFailed;
}

// --- cross-check ------------------------------------------------------------

struct CrossArgs {
  std::string field = "R";
  int max_n = 6;
  std::string exponent_max = "3";
  std::size_t random = 0;
  bool only_families = false;
  std::string exponent_bound = "1";
  int param_bound = 1;
};

int run_cross_check(const CrossArgs& a, const Global& g, Output& out) {
  const FieldSpec& field = parse_field(a.field);
  if (a.max_n < 1 || a.max_n > 8) throw DomainError("--max-n must be between 1 and 8");
  CrossCheckTally tally;
  std::size_t family_failures = 0;
  json failures = json::array();
  std::string mode;
  if (a.only_families) {
    mode = "families";
    for (int n = 1; n <= a.max_n; ++n)
      enumerate_family(field, {n, parse_rational(a.exponent_bound), a.param_bound, g.seed},
                       [&](const FamilyMember& m) {
                         tally.record(m.quadruple);
                         const Classification c = classify(m.quadruple);
                         if (c.dim == 1 && kind_of(c.certificate) == kind_of(m.classification.certificate)) return;
                         if (family_failures++ < kMaxListedDisagreements)
                           failures.push_back({{"quadruple", to_json(m.quadruple)},
                                               {"expected", to_json(m.classification)},
                                               {"direct", to_json(c)}});
                       });
  } else if (a.random > 0) {
    mode = "random";
    RandomQuadruples source(field, a.max_n, g.seed);
    for (std::size_t t = 0; t < a.random; ++t) tally.record(source.next());
  } else {
    mode = "grid";
    const Rational hi = parse_rational(a.exponent_max);
    if (hi < 0 || hi > 4) throw DomainError("--exponent-max must lie in [0, 4]");
    for_each_grid_quadruple(field, a.max_n, exponent_grid(field, 0, hi), [&](const Quadruple& x) { tally.record(x); });
  }

  json listed = json::array();
  for (std::size_t d = 0; d < tally.disagreements.size() && d < kMaxListedDisagreements; ++d) {
    const auto& dis = tally.disagreements[d];
    listed.push_back(
        {{"quadruple", to_json(dis.quadruple)}, {"direct", to_json(dis.direct)}, {"inductive", to_json(dis.inductive)}});
  }
  json report{{"field", field.name()},
              {"mode", mode},
              {"max_n", a.max_n},
              {"seed", g.seed},
              {"checked", tally.checked},
              {"agreements", tally.checked - tally.disagreements.size()},
              {"disagreement_count", tally.disagreements.size()},
              {"disagreements", listed}};
  if (a.only_families) {
    report["family_failures"] = family_failures;
    report["family_failure_list"] = failures;
  }
  std::ostringstream human;
  human << mode << " cross-check over " << field.name() << ": " << tally.checked << " quadruples, "
        << tally.disagreements.size() << " disagreements";
  if (a.only_families) human << ", " << family_failures << " family failures";
  human << '\n';
  out.emit("cross-check", report, human.str());
  return tally.disagreements.empty() && family_failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classification of intertwining operators between degenerate principal series", "intertwine"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Output mode")->check(CLI::IsMember({"json", "human"}));
  app.add_option("--seed", g.seed, "Seed for std::mt19937_64");
  app.add_option("--out", g.out_dir, "Directory for report files (default: stdout only)");

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a quadruple of characters");
  classify_cmd->add_option("--field", ca.field, "R, C or NA[:q=Q][:tags=a,b]");
  classify_cmd->add_option("blocks", ca.blocks, "Four characters chi1 chi2 chi3 chi4")->required()->expected(4);
  classify_cmd->add_flag("--inductive", ca.inductive, "Use the inductive classifier");

  EnumerateArgs ea;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List family members of total size n");
  enumerate_cmd->add_option("--field", ea.field);
  enumerate_cmd->add_option("--n", ea.n)->check(CLI::Range(1, 16));
  enumerate_cmd->add_option("--exponent-bound", ea.exponent_bound);
  enumerate_cmd->add_option("--param-bound", ea.param_bound)->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_flag("--count-only", ea.count_only);

  FiniteArgs fa;
  auto* finite_cmd = app.add_subcommand("verify-finite", "Finite Grassmannian model checks");
  finite_cmd->add_option("--n", fa.n)->check(CLI::Range(1, 6));
  finite_cmd->add_option("--q", fa.q);
  auto* radon_opt = finite_cmd->add_option("--radon", fa.radon, "a b")->expected(2);
  finite_cmd->add_option("--incidence", fa.incidence, "a b r")->expected(3)->excludes(radon_opt);
  finite_cmd->add_flag("--compose", fa.compose, "Also test T * T^t on constants");

  DiffopArgs da;
  auto* diffop_cmd = app.add_subcommand("verify-diffop", "Differential operator intertwining checks");
  diffop_cmd->add_option("--field", da.field);
  diffop_cmd->add_option("--k", da.k)->check(CLI::Range(1, 3));
  diffop_cmd->add_option("--i", da.i)->check(CLI::Range(1, 4));
  diffop_cmd->add_option("--j", da.j)->check(CLI::Range(-4, 4));
  diffop_cmd->add_option("--variant", da.variant)->check(CLI::IsMember({1, 2}));
  diffop_cmd->add_option("--perturb", da.perturb, "Exponent slot, e.g. s2, chi.s1, eta.b2");
  diffop_cmd->add_option("--perturb-by", da.perturb_by);
  diffop_cmd->add_option("--trials", da.trials)->check(CLI::Range(0, 100));

  CrossArgs xa;
  auto* cross_cmd = app.add_subcommand("cross-check", "Compare the direct and inductive classifiers");
  cross_cmd->add_option("--field", xa.field);
  cross_cmd->add_option("--max-n", xa.max_n);
  cross_cmd->add_option("--exponent-max", xa.exponent_max);
  cross_cmd->add_option("--random", xa.random, "Number of seeded random quadruples instead of the grid");
  cross_cmd->add_flag("--only-families", xa.only_families, "Replay enumerate_family");
  cross_cmd->add_option("--exponent-bound", xa.exponent_bound);
  cross_cmd->add_option("--param-bound", xa.param_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  Output output(g, out);
  try {
    if (*classify_cmd) return run_classify(ca, output);
    if (*enumerate_cmd) return run_enumerate(ea, g, output);
    if (*finite_cmd) return run_verify_finite(fa, output);
    if (*diffop_cmd) return run_verify_diffop(da, g, output);
    if (*cross_cmd) return run_cross_check(xa, g, output);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSemanticError;
  }
  return kParseError;
}

}  // namespace intertwine::cli
