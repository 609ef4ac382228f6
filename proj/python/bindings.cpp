#include "commands.hpp"

#include "intertwine/diffop.hpp"
#include "intertwine/errors.hpp"
#include "intertwine/family.hpp"
#include "intertwine/finite_model.hpp"
#include "intertwine/inductive.hpp"
#include "intertwine/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace intertwine;

namespace {

using IntMatrix = std::vector<std::vector<py::int_>>;

Quadruple quadruple(const std::string& field, const std::vector<std::string>& blocks) {
  if (blocks.size() != 4) throw InvalidQuadruple("expected four characters");
  const FieldSpec& f = parse_field(field);
  return Quadruple(parse_char(blocks[0], f), parse_char(blocks[1], f), parse_char(blocks[2], f),
                   parse_char(blocks[3], f));
}

IntMatrix to_python(const ExactMatrix& m) {
  IntMatrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r].push_back(py::int_(py::str(m(r, c).get_str())));
  return out;
}

ExactMatrix from_python(const IntMatrix& rows) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DomainError("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = mpz_class(py::str(rows[r][c]).cast<std::string>());
  }
  return m;
}

FieldKind archimedean_kind(const std::string& field) {
  const FieldKind k = parse_field(field).kind();
  if (k == FieldKind::NonArch) throw DomainError("differential operators need R or C");
  return k;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intertwining operators between degenerate principal series: classifier and verifiers";

  static py::exception<Error> base(m, "IntertwineError", PyExc_RuntimeError);
  static py::exception<ParseError> parse(m, "CharacterParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("_classify_json", [](const std::string& field, const std::vector<std::string>& blocks, bool inductive) {
    const Quadruple x = quadruple(field, blocks);
    return to_json(inductive ? inductive_classify(x) : classify(x)).dump();
  });
  m.def("central_constraint", [](const std::string& field, const std::vector<std::string>& blocks) {
    return central_constraint(quadruple(field, blocks));
  }, py::arg("field"), py::arg("blocks"));

  m.def("_enumerate_family_json", [](const std::string& field, int n, const std::string& exponent_bound,
                                     int param_bound, std::uint64_t seed) {
    nlohmann::json out = nlohmann::json::array();
    enumerate_family(parse_field(field), EnumerationBounds{n, parse_rational(exponent_bound), param_bound, seed},
                     [&](const FamilyMember& member) {
                       out.push_back({{"quadruple", to_json(member.quadruple)},
                                      {"classification", to_json(member.classification)}});
                     });
    return out.dump();
  });

  m.def("gaussian_binomial", [](int n, int d, int q) { return py::int_(py::str(gaussian_binomial(n, d, q).get_str())); },
        py::arg("n"), py::arg("d"), py::arg("q"));
  m.def("radon_matrix", [](int a, int b, int n, int q) { return to_python(radon_matrix(a, b, n, q)); },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("q"));
  m.def("incidence_matrix",
        [](int a, int b, int n, int q, int r) { return to_python(incidence_matrix(a, b, n, q, r)); },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("q"), py::arg("r"));
  m.def("check_equivariance",
        [](const IntMatrix& t, int a, int b, int n, int q) { return check_equivariance(from_python(t), a, b, n, q); },
        py::arg("matrix"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("q"));
  m.def("rank_exact", [](const IntMatrix& t) { return rank_exact(from_python(t)); }, py::arg("matrix"));

  m.def("verify_exceptional", [](const std::string& field, int k, int i, int j, int variant) {
    const DiffopReport r = verify_exceptional(archimedean_kind(field), k, i, j, variant);
    py::dict out;
    out["ok"] = r.ok;
    out["checked"] = r.checked;
    out["witness"] = r.witness;
    out["residue"] = r.residue;
    return out;
  }, py::arg("field"), py::arg("k"), py::arg("i"), py::arg("j") = 0, py::arg("variant") = 1);
  m.def("bracket_fidelity", [](const std::string& field, int k) {
    const BracketReport r = bracket_fidelity(archimedean_kind(field), k);
    py::dict out;
    out["ok"] = r.ok;
    out["pairs_checked"] = r.pairs_checked;
    out["witness"] = r.witness;
    return out;
  }, py::arg("field"), py::arg("k"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> all{"intertwine"};
    all.insert(all.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : all) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line tool in process; returns (exit_code, stdout, stderr).");
}
