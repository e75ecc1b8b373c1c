// Command-line front end. Exit codes: 0 success / equal / sound,
// 1 unequal / unsound, 2 bad input.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "zxw/evaluator.hpp"
#include "zxw/gadgets.hpp"
#include "zxw/random.hpp"
#include "zxw/rules.hpp"
#include "zxw/synth.hpp"
#include "zxw/translate.hpp"

using namespace zxw;
using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kTermNodeLimit = 500;

std::string slurp(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  auto p = arg.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && (arg[p] == '(' || arg[p] == '{' || arg[p] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read '" + arg + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_json(const std::string& s) {
  auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (s[p] == '{' || s[p] == '[');
}

Diagram read_diagram(const std::string& arg) {
  std::string text = slurp(arg);
  if (looks_like_json(text)) return diagram_from_json(json::parse(text));
  return to_graph(parse_term(text));
}

RingMatrix read_matrix(const std::string& arg) { return matrix_from_json(json::parse(slurp(arg))); }

struct Out {
  bool json_format = false;

  void matrix(const RingMatrix& m) const {
    if (json_format)
      std::cout << to_json(m).dump() << "\n";
    else
      std::cout << to_text(m) << "\n";
  }

  void diagram(const Diagram& d) const {
    if (json_format) {
      std::cout << to_json(d).dump() << "\n";
    } else if (d.nodes.size() <= kTermNodeLimit) {
      std::cout << serialize(to_term(d)) << "\n";
    } else {
      std::cout << "diagram " << d.n_in << " -> " << d.n_out << ", " << d.nodes.size() << " nodes, "
                << d.edges.size() << " wires, calculus " << calculus_name(d.calculus())
                << " (use --format json for the graph)\n";
    }
  }

  void term(const Term& t) const {
    if (json_format)
      std::cout << to_json(to_graph(t)).dump() << "\n";
    else
      std::cout << serialize(t) << "\n";
  }
};

int report_table(const std::vector<SoundnessReport>& reps, const Out& out) {
  bool all = true;
  json arr = json::array();
  for (const auto& r : reps) {
    all = all && r.sound;
    if (out.json_format) {
      json w = json::object();
      for (const auto& [k, v] : r.witness) w[k] = v;
      arr.push_back({{"id", r.id}, {"sound", r.sound}, {"instances", r.instances}, {"detail", r.detail},
                     {"witness", r.sound ? json(nullptr) : w}});
    } else {
      std::cout << std::left << std::setw(14) << r.id << std::right << std::setw(7) << r.instances << "  "
                << (r.sound ? "sound" : "UNSOUND " + r.detail) << "\n";
    }
  }
  if (out.json_format)
    std::cout << json{{"all_sound", all}, {"results", arr}}.dump() << "\n";
  else
    std::cout << (all ? "all sound" : "unsound entries found") << "\n";
  return all ? 0 : 1;
}

Term gadget_term(const std::string& name, const std::vector<int>& k) {
  auto arg = [&](std::size_t i) {
    if (i >= k.size()) throw InputError("gadget " + name + " needs " + std::to_string(i + 1) + " angle(s)");
    return k[i];
  };
  if (name == "crz") return controlled_rz(arg(0));
  if (name == "crx") return controlled_rx(arg(0));
  if (name == "acrz") return anti_controlled(controlled_rz(arg(0)));
  if (name == "acrx") return anti_controlled(controlled_rx(arg(0)));
  if (name == "cu") return controlled_u(arg(0), arg(1));
  if (name == "and") return and_gate();
  if (name == "toffoli") return toffoli();
  if (name == "triangle-from-toffoli") return triangle_from_toffoli();
  throw InputError("unknown gadget '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ZX / ZW diagram toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  Out out;

  std::string a, b, which, target = "zx", calculus = "all";
  bool up_to_scalar = false;
  int bound = 3;
  std::uint64_t seed = 1;
  std::string name;
  std::vector<int> angles;

  auto* eval = app.add_subcommand("eval", "Evaluate a diagram to its exact matrix");
  eval->add_option("diagram", a, "Term, JSON graph, file, or - for stdin")->required();

  auto* eq = app.add_subcommand("eq", "Compare two diagrams");
  eq->add_option("first", a)->required();
  eq->add_option("second", b)->required();
  eq->add_flag("--up-to-scalar", up_to_scalar, "Accept a nonzero scalar factor");

  auto* tr = app.add_subcommand("translate", "Translate between the calculi");
  tr->add_option("direction", which)->required()->check(CLI::IsMember({"xw", "wx"}));
  tr->add_option("diagram", a)->required();

  auto* rec = app.add_subcommand("recover", "Undo the control pair of a translated diagram");
  rec->add_option("diagram", a)->required();

  auto* syn = app.add_subcommand("synth", "Build a diagram from a JSON matrix");
  syn->add_option("--target", target)->check(CLI::IsMember({"zx", "zw"}));
  syn->add_option("matrix", a)->required();

  auto* cr = app.add_subcommand("check-rules", "Check every axiom and variant exactly");
  cr->add_option("--calculus", calculus)->check(CLI::IsMember({"zx", "zw", "all"}));
  cr->add_option("--bound", bound)->check(CLI::Range(0, 6));

  auto* cl = app.add_subcommand("check-lemmas", "Check the lemma corpus exactly");
  cl->add_option("--bound", bound)->check(CLI::Range(0, 6));

  auto* cp = app.add_subcommand("check-proof", "Replay a proof script");
  cp->add_option("script", a)->required();

  auto* gd = app.add_subcommand("gadget", "Print a gadget: crz crx acrz acrx cu and toffoli triangle-from-toffoli");
  gd->add_option("name", name)->required();
  gd->add_option("angles", angles, "Angles in multiples of pi/4");

  auto* rnd = app.add_subcommand("random", "Print a random term");
  rnd->add_option("calculus", which)->required()->check(CLI::IsMember({"zx", "zw"}));
  rnd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  out.json_format = format == "json";

  try {
    if (*eval) {
      out.matrix(evaluate(read_diagram(a)));
    } else if (*eq) {
      RingMatrix x = evaluate(read_diagram(a)), y = evaluate(read_diagram(b));
      if (x.out_wires() != y.out_wires() || x.in_wires() != y.in_wires())
        throw InputError("types differ: " + x.shape_string() + " vs " + y.shape_string());
      bool same;
      json j;
      if (up_to_scalar) {
        auto r = equal_up_to_scalar(x, y);
        same = r.equal;
        j = {{"equal", same}, {"scalar", same ? to_json(r.scalar) : json(nullptr)}};
        if (!out.json_format)
          std::cout << (same ? "equal up to scalar " + r.scalar.to_string() : std::string("not equal up to scalar")) << "\n";
      } else {
        same = equal(x, y);
        j = {{"equal", same}};
        if (!out.json_format) std::cout << (same ? "equal" : "not equal") << "\n";
      }
      if (out.json_format) std::cout << j.dump() << "\n";
      return same ? 0 : 1;
    } else if (*tr) {
      Diagram d = read_diagram(a);
      out.diagram(which == "xw" ? xw(d) : wx(d));
    } else if (*rec) {
      out.diagram(recover(read_diagram(a)));
    } else if (*syn) {
      RingMatrix m = read_matrix(a);
      out.diagram(target == "zx" ? zx_synthesize(m) : zw_synthesize(m));
    } else if (*cr) {
      std::vector<SoundnessReport> reps;
      for (Calculus c : {Calculus::ZX, Calculus::ZW}) {
        if ((calculus == "zx" && c != Calculus::ZX) || (calculus == "zw" && c != Calculus::ZW)) continue;
        for (const auto& r : catalog(c)) {
          reps.push_back(soundness_check(r, bound));
          for (const auto& v : variants(r)) reps.push_back(soundness_check(v, bound));
        }
      }
      return report_table(reps, out);
    } else if (*cl) {
      return report_table(verify_lemmas(lemma_corpus(), bound), out);
    } else if (*cp) {
      auto res = check_proof(json::parse(slurp(a)));
      if (out.json_format) {
        std::cout << json{{"ok", res.ok}, {"trace", res.trace}}.dump() << "\n";
      } else {
        for (const auto& line : res.trace) std::cout << line << "\n";
        std::cout << (res.ok ? "proof accepted" : "proof rejected") << "\n";
      }
      return res.ok ? 0 : 1;
    } else if (*gd) {
      out.term(gadget_term(name, angles));
    } else if (*rnd) {
      std::mt19937_64 rng(seed);
      out.term(which == "zx" ? random_zx_term(rng) : random_zw_term(rng));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
