// Command-line front end for the raag library.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "raag/raag.hpp"
#include "raag/report_json.hpp"

namespace {

using namespace raag;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kCap = 3 };

struct Config {
  std::string graph_path;
  std::string order;
  bool json = false;
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 0;
  std::string word;
  std::string lambda = "0";
  std::size_t N = 2;
  bool diagnostic = false;
  bool include_trivial = false;
  std::string apex;
  std::size_t root_degree = 2;
  std::string a, g, b;
  std::size_t n = 0;
  std::size_t trials = 100;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

GraphPtr load_graph(Config const& c) {
  if (c.graph_path.empty()) {
    throw UsageError("--graph is required");
  }
  std::ifstream in(c.graph_path);
  if (!in) {
    throw UsageError("cannot read graph file '" + c.graph_path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return make_graph(buf.str());
}

VertexOrder load_order(Config const& c, DefiningGraph const& g) {
  if (c.order.empty()) {
    return VertexOrder::of(g);
  }
  std::istringstream in(c.order);
  std::vector<std::string> names;
  for (std::string s; in >> s;) {
    names.push_back(s);
  }
  return VertexOrder::from_names(g, names);
}

QuasiRootParams load_params(Config const& c) {
  return QuasiRootParams(parse_rational(c.lambda), c.N, c.diagnostic);
}

std::string show(Element const& e) { return e.is_identity() ? "1" : e.str(); }

std::string names(DefiningGraph const& g, VertexSet s, VertexOrder const& order) {
  std::string out;
  for (Vertex v : order.sequence()) {
    if (s.contains(v)) {
      out += (out.empty() ? "" : " ") + g.name(v);
    }
  }
  return out;
}

std::string yes(bool b) { return b ? "true" : "false"; }

void print_json(nlohmann::json const& j) { std::cout << j.dump(2) << "\n"; }

int cmd_reduce(Config const& c) {
  auto gp = load_graph(c);
  Word w = reduce(*gp, parse_word(*gp, c.word));
  if (c.json) {
    print_json({{"word", to_string(*gp, w)}});
  } else {
    std::cout << to_string(*gp, w) << "\n";
  }
  return kOk;
}

int cmd_nf(Config const& c) {
  auto gp = load_graph(c);
  Word w = normal_form(Element::parse(gp, c.word), load_order(c, *gp));
  if (c.json) {
    print_json({{"normal_form", to_string(*gp, w)}});
  } else {
    std::cout << to_string(*gp, w) << "\n";
  }
  return kOk;
}

int cmd_vertex_set(Config const& c, bool starting) {
  auto gp = load_graph(c);
  Element e = Element::parse(gp, c.word);
  VertexSet s = starting ? starting_generators(e) : e.support();
  std::string text = names(*gp, s, load_order(c, *gp));
  if (c.json) {
    print_json({{starting ? "starting_generators" : "support", text}});
  } else {
    std::cout << text << "\n";
  }
  return kOk;
}

int cmd_classify(Config const& c) {
  auto gp = load_graph(c);
  auto order = load_order(c, *gp);
  Element e = Element::parse(gp, c.word);
  std::vector<std::pair<std::string, std::string>> rows;
  bool conical = is_conical(e);
  rows.emplace_back("length", std::to_string(e.length()));
  rows.emplace_back("conical", yes(conical));
  if (conical) {
    rows.emplace_back("apex", gp->name(apex(e)));
  }
  rows.emplace_back("pyramidal", yes(is_pyramidal(e, order)));
  rows.emplace_back("sd-conical", yes(is_sd_conical(e, order)));
  rows.emplace_back("split", yes(!is_non_split(e)));
  rows.emplace_back("strongly-non-split", yes(is_strongly_non_split(e)));
  rows.emplace_back("cyclically-reduced", yes(is_cyclically_reduced(e)));
  rows.emplace_back("primitive",
                    e.is_identity() ? "undefined" : yes(is_primitive(e, c.cap)));
  if (c.json) {
    nlohmann::json j;
    for (auto const& [k, v] : rows) {
      j[k] = v;
    }
    print_json(j);
  } else {
    for (auto const& [k, v] : rows) {
      std::cout << k << ": " << v << "\n";
    }
  }
  return kOk;
}

int cmd_conical_conjugate(Config const& c) {
  auto gp = load_graph(c);
  auto r = conical_conjugate(Element::parse(gp, c.word), gp->vertex(c.apex));
  if (c.json) {
    print_json({{"p", r.p.str()}, {"a", r.a.str()}, {"b", r.b.str()}, {"k", r.k}});
  } else {
    std::cout << "p: " << show(r.p) << "\na: " << show(r.a) << "\nb: " << show(r.b)
              << "\nk: " << r.k << "\n";
  }
  return kOk;
}

int cmd_cyc_reduce(Config const& c) {
  auto gp = load_graph(c);
  auto r = cyclically_reduce(Element::parse(gp, c.word));
  if (c.json) {
    print_json({{"u", r.u.str()}, {"h", r.h.str()}});
  } else {
    std::cout << "u: " << show(r.u) << "\nh: " << show(r.h) << "\n";
  }
  return kOk;
}

int cmd_roots(Config const& c) {
  auto gp = load_graph(c);
  auto roots = extract_nth_roots(Element::parse(gp, c.word), c.root_degree, c.cap);
  if (c.json) {
    nlohmann::json j = nlohmann::json::array();
    for (auto const& r : roots) {
      j.push_back(r.str());
    }
    print_json({{"roots", j}});
  } else {
    for (auto const& r : roots) {
      std::cout << r.str() << "\n";
    }
  }
  return kOk;
}

int cmd_find(Config const& c) {
  auto gp = load_graph(c);
  auto params = load_params(c);
  Element h = Element::parse(gp, c.word);
  auto found = find_quasi_roots(params, h, {!c.include_trivial, c.cap});
  if (c.json) {
    print_json(search_json(params, h, found));
  } else {
    for (auto const& d : found) {
      std::cout << "a: " << show(d.a) << " | g: " << show(d.g) << " | n: " << d.n
                << " | b: " << show(d.b) << "\n";
    }
  }
  return kOk;
}

int cmd_verify(Config const& c) {
  auto gp = load_graph(c);
  auto params = load_params(c);
  QuasiRootDecomposition d{Element::parse(gp, c.word), Element::parse(gp, c.a),
                           Element::parse(gp, c.g), c.n, Element::parse(gp, c.b)};
  auto r = verify_quasi_root(params, d);
  if (c.json) {
    nlohmann::json j = params_json(params);
    j["decomposition"] = to_json(d);
    j["conditions"] = checklist_json(r.conditions);
    j["valid"] = r.ok();
    print_json(j);
  } else {
    for (auto const& [name, ok] : r.conditions) {
      std::cout << name << ": " << yes(ok) << "\n";
    }
    std::cout << "valid: " << yes(r.ok()) << "\n";
  }
  return r.ok() ? kOk : kViolation;
}

int cmd_theorem_check(Config const& c) {
  auto gp = load_graph(c);
  auto params = load_params(c);
  Element h = Element::parse(gp, c.word);
  auto found = find_quasi_roots(params, h, {true, c.cap});
  bool violation = false;
  nlohmann::json reports = nlohmann::json::array();
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = i + 1; j < found.size(); ++j) {
      auto r = check_uniqueness(params, found[i], found[j], c.cap);
      violation |= r.status == CheckReport::Status::theorem_violation;
      if (c.json) {
        reports.push_back(to_json(r, params, found[i], found[j]));
        continue;
      }
      std::cout << "[" << i << "," << j << "] " << to_string(r.status)
                << " left=" << yes(r.left_conjugate_equal)
                << " right=" << yes(r.right_conjugate_equal)
                << " conjugate=" << yes(r.roots_conjugate);
      for (auto const& name : failures(r.hypotheses)) {
        std::cout << " !" << name;
      }
      std::cout << "\n";
    }
  }
  if (c.json) {
    nlohmann::json j = search_json(params, h, found);
    j["reports"] = reports;
    print_json(j);
  } else {
    std::cout << "decompositions: " << found.size() << "\n";
  }
  return violation ? kViolation : kOk;
}

int cmd_random_test(Config const& c) {
  std::size_t bad = 0;
  std::size_t checks = 0;
  for (std::size_t t = 0; t < c.trials; ++t) {
    std::uint64_t seed = c.seed + t;
    auto r = run_seed(seed, {}, c.cap);
    checks += r.uniqueness_checks;
    if (!r.ok()) {
      ++bad;
      std::cout << "seed " << seed << ":";
      if (!r.planted_found) {
        std::cout << " planted decomposition missing";
      }
      for (auto const& v : r.violations) {
        std::cout << " " << v << ";";
      }
      std::cout << "\n";
    }
  }
  std::cout << "trials: " << c.trials << "\nuniqueness checks: " << checks
            << "\nviolations: " << bad << "\n";
  return bad == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  if (char const* env = std::getenv("RAAG_CAP")) {
    try {
      c.cap = std::stoull(env);
    } catch (std::exception const&) {
      std::cerr << "error: RAAG_CAP must be a positive integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Computations in right-angled Artin groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--graph", c.graph_path, "Defining graph file");
  app.add_option("--order", c.order, "Vertex order, smallest first, space separated");
  app.add_flag("--json", c.json, "JSON output");
  app.add_option("--cap", c.cap, "Enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Random seed");

  std::vector<std::pair<CLI::App*, std::function<int(Config const&)>>> commands;
  auto add = [&](char const* name, char const* help, auto fn, bool word = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (word) {
      sub->add_option("word", c.word, "Word, e.g. \"v2 v3^-1 (v4 v5)^2\"")->required();
    }
    commands.emplace_back(sub, fn);
    return sub;
  };
  auto quasi = [&](CLI::App* sub) {
    sub->add_option("--lambda", c.lambda, "lambda as p/q")->required();
    sub->add_option("--min-power", c.N, "N")->required();
    sub->add_flag("--diagnostic", c.diagnostic, "Admit lambda = 1/2");
  };

  add("reduce", "Reduce a word", cmd_reduce);
  add("nf", "Normal form", cmd_nf);
  add("support", "Support", [](Config const& x) { return cmd_vertex_set(x, false); });
  add("startings", "Starting generators",
      [](Config const& x) { return cmd_vertex_set(x, true); });
  add("classify", "Structural predicates", cmd_classify);
  add("conical-conjugate", "Conical conjugate with a given apex", cmd_conical_conjugate)
      ->add_option("--apex", c.apex, "Apex vertex")
      ->required();
  add("cyc-reduce", "Cyclic reduction", cmd_cyc_reduce);
  add("roots", "n-th roots", cmd_roots)
      ->add_option("--n", c.root_degree, "Root degree")
      ->required();
  auto* find = add("find-quasiroots", "All quasi-root decompositions", cmd_find);
  quasi(find);
  find->add_flag("--include-trivial", c.include_trivial, "Also list g = 1");
  auto* verify = add("verify-quasiroot", "Check one decomposition", cmd_verify);
  quasi(verify);
  verify->add_option("--a", c.a, "a")->required();
  verify->add_option("--g", c.g, "g")->required();
  verify->add_option("--n", c.n, "n")->required();
  verify->add_option("--b", c.b, "b")->required();
  quasi(add("theorem-check", "Uniqueness check over all decompositions",
            cmd_theorem_check));
  add("random-test", "Uniqueness harness on generated instances", cmd_random_test,
      false)
      ->add_option("--trials", c.trials, "Number of instances");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (auto const& [sub, fn] : commands) {
      if (sub->parsed()) {
        return fn(c);
      }
    }
  } catch (CapExceeded const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (InternalError const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kViolation;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
