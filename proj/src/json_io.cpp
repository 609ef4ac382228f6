#include "intertwine/json_io.hpp"

namespace intertwine {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

nlohmann::json to_json(const CharFx& chi) {
  nlohmann::json tag = nlohmann::json::array();
  for (auto t : chi.tag()) tag.push_back(t);
  return {{"s_re", to_fraction_string(chi.s_re())},
          {"s_im", to_fraction_string(chi.s_im())},
          {"tag", tag},
          {"text", render(chi)}};
}

nlohmann::json params_json(const Certificate& c) {
  return std::visit(
      overloaded{
          [](const cert::Rank1& r) -> nlohmann::json { return {{"i", r.i}, {"j", r.j}, {"k", r.k}}; },
          [](const cert::Radon& r) -> nlohmann::json {
            return {{"case", std::string(1, to_char(r.which))}, {"i", r.i}, {"j", r.j}, {"k", r.k}};
          },
          [](const cert::RealCapelli& r) -> nlohmann::json { return {{"i", r.i}, {"k", r.k}}; },
          [](const cert::ComplexCapelli& r) -> nlohmann::json {
            return {{"i", r.i}, {"j", r.j}, {"k", r.k}, {"variant", r.variant}};
          },
          [](const auto&) { return nlohmann::json::object(); },
      },
      c);
}

nlohmann::json to_json(const Classification& c) {
  nlohmann::json out{{"dim", c.dim},
                     {"family", family_name(kind_of(c.certificate))},
                     {"params", params_json(c.certificate)},
                     {"twist", to_json(c.twist)},
                     {"reference", reference_label(c.certificate)}};
  if (const auto* none = std::get_if<cert::NoFamily>(&c.certificate)) out["reason"] = to_string(none->reason);
  return out;
}

nlohmann::json to_json(const Quadruple& x) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : x.blocks()) blocks.push_back(render(b));
  return {{"field", x.field().name()}, {"blocks", blocks}};
}

}  // namespace intertwine
