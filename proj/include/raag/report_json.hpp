#ifndef RAAG_REPORT_JSON_HPP_
#define RAAG_REPORT_JSON_HPP_

// JSON for quasi-root decompositions and check reports. Elements are token
// strings in normal form, the identity is "", lambda is "p/q".

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quasiroot.hpp"

namespace raag {

inline nlohmann::json checklist_json(Checklist const& c) {
  nlohmann::json out = nlohmann::json::object();
  for (auto const& [name, ok] : c) {
    out[name] = ok;
  }
  return out;
}

inline nlohmann::json to_json(QuasiRootDecomposition const& d) {
  return {{"h", d.h.str()}, {"a", d.a.str()}, {"g", d.g.str()},
          {"n", d.n},       {"b", d.b.str()}};
}

inline QuasiRootDecomposition decomposition_from_json(GraphPtr const& graph,
                                                      nlohmann::json const& j) {
  try {
    return {Element::parse(graph, j.at("h").get<std::string>()),
            Element::parse(graph, j.at("a").get<std::string>()),
            Element::parse(graph, j.at("g").get<std::string>()),
            j.at("n").get<std::size_t>(),
            Element::parse(graph, j.at("b").get<std::string>())};
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("bad decomposition: ") + e.what());
  }
}

inline nlohmann::json params_json(QuasiRootParams const& p) {
  return {{"lambda", to_string(p.lambda)}, {"N", p.N}};
}

inline nlohmann::json search_json(QuasiRootParams const& p, Element const& h,
                                  std::vector<QuasiRootDecomposition> const& found) {
  nlohmann::json j = params_json(p);
  j["h"] = h.str();
  j["decompositions"] = nlohmann::json::array();
  for (auto const& d : found) {
    j["decompositions"].push_back(to_json(d));
  }
  return j;
}

inline nlohmann::json to_json(UniquenessReport const& r, QuasiRootParams const& p,
                              QuasiRootDecomposition const& d1,
                              QuasiRootDecomposition const& d2) {
  nlohmann::json j = params_json(p);
  j["status"] = to_string(r.status);
  j["first"] = to_json(d1);
  j["second"] = to_json(d2);
  j["hypotheses"] = checklist_json(r.hypotheses);
  j["left_conjugate_equal"] = r.left_conjugate_equal;
  j["right_conjugate_equal"] = r.right_conjugate_equal;
  j["roots_conjugate"] = r.roots_conjugate;
  return j;
}

}  // namespace raag

#endif  // RAAG_REPORT_JSON_HPP_
