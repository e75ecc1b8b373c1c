// Python bindings. Diagrams cross the boundary as term text or JSON text;
// the zxw package turns JSON text into Python objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zxw/evaluator.hpp"
#include "zxw/gadgets.hpp"
#include "zxw/rules.hpp"
#include "zxw/synth.hpp"
#include "zxw/translate.hpp"

namespace py = pybind11;
using namespace zxw;
using nlohmann::json;

namespace {

Diagram read(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') return diagram_from_json(json::parse(text));
  return to_graph(parse_term(text));
}

std::string reports(const std::vector<SoundnessReport>& reps) {
  json out = json::array();
  for (const auto& r : reps) {
    json w = json::object();
    for (const auto& [k, v] : r.witness) w[k] = v;
    out.push_back({{"id", r.id}, {"sound", r.sound}, {"instances", r.instances}, {"detail", r.detail},
                   {"witness", w}});
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ZX / ZW diagrams over D[w]";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TypeError>(m, "DiagramTypeError", PyExc_TypeError);
  py::register_exception<BindingError>(m, "BindingError", PyExc_ValueError);

  m.def("normalize", [](const std::string& t) { return serialize(parse_term(t)); },
        "Parses a term and prints it back in canonical form.");
  m.def("evaluate_json", [](const std::string& d) { return to_json(evaluate(read(d))).dump(); });
  m.def("evaluate_text", [](const std::string& d) { return to_text(evaluate(read(d))); });
  m.def("equal", [](const std::string& a, const std::string& b) { return equal(evaluate(read(a)), evaluate(read(b))); });
  m.def("equal_up_to_scalar", [](const std::string& a, const std::string& b) {
    auto r = equal_up_to_scalar(evaluate(read(a)), evaluate(read(b)));
    return py::make_tuple(r.equal, r.equal ? r.scalar.to_string() : std::string());
  });
  m.def("graph_json", [](const std::string& d) { return to_json(read(d)).dump(); });
  m.def("xw_json", [](const std::string& d) { return to_json(xw(read(d))).dump(); });
  m.def("wx_json", [](const std::string& d) { return to_json(wx(read(d))).dump(); });
  m.def("recover_json", [](const std::string& d) { return to_json(recover(read(d))).dump(); });
  m.def("synthesize_json", [](const std::string& matrix, const std::string& target) {
    RingMatrix a = matrix_from_json(json::parse(matrix));
    if (target == "zx") return to_json(zx_synthesize(a)).dump();
    if (target == "zw") return to_json(zw_synthesize(a)).dump();
    throw std::invalid_argument("target must be zx or zw");
  });
  m.def("rule_ids", [](const std::string& calculus) {
    std::vector<std::string> ids;
    for (const auto& r : catalog(calculus == "zw" ? Calculus::ZW : Calculus::ZX)) ids.push_back(r.id);
    return ids;
  });
  m.def("check_rules_json", [](const std::string& calculus, int bound) {
    std::vector<SoundnessReport> reps;
    for (const auto& r : catalog(calculus == "zw" ? Calculus::ZW : Calculus::ZX)) {
      reps.push_back(soundness_check(r, bound));
      for (const auto& v : variants(r)) reps.push_back(soundness_check(v, bound));
    }
    return reports(reps);
  }, py::arg("calculus"), py::arg("bound") = 3);
  m.def("check_lemmas_json", [](int bound) { return reports(verify_lemmas(lemma_corpus(), bound)); },
        py::arg("bound") = 3);
  m.def("check_proof_json", [](const std::string& script) {
    auto r = check_proof(json::parse(script));
    return py::make_tuple(r.ok, r.trace);
  });
  m.def("gadget", [](const std::string& name, std::vector<int> k) {
    auto at = [&](std::size_t i) {
      if (i >= k.size()) throw std::invalid_argument(name + " needs more angles");
      return k[i];
    };
    if (name == "crz") return serialize(controlled_rz(at(0)));
    if (name == "crx") return serialize(controlled_rx(at(0)));
    if (name == "cu") return serialize(controlled_u(at(0), at(1)));
    if (name == "toffoli") return serialize(toffoli());
    if (name == "triangle-from-toffoli") return serialize(triangle_from_toffoli());
    throw std::invalid_argument("unknown gadget '" + name + "'");
  }, py::arg("name"), py::arg("angles") = std::vector<int>{});
}
