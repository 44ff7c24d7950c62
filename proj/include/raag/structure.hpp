#ifndef RAAG_STRUCTURE_HPP_
#define RAAG_STRUCTURE_HPP_

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "element.hpp"
#include "error.hpp"

namespace raag {

// |g^2| = 2|g|. Equivalent to every other characterisation of being
// cyclically reduced; the identity counts as cyclically reduced.
inline bool is_cyclically_reduced(Element const& g) {
  return (g * g).length() == 2 * g.length();
}

// g = u^-1 h u, geodesic, with h cyclically reduced.
struct CyclicReduction {
  Element u;
  Element h;
};

namespace detail {

// One strip g = x^-e . h . x^e with x^-e a first letter and x^e a last
// letter of g; returns (x^e, h).
inline std::optional<std::pair<Letter, Element>> strip_one(Element const& g) {
  if (g.length() < 2) {
    return std::nullopt;
  }
  auto dag = dependence_dag(g);
  auto const& w = dag.word();
  auto firsts = dag.minimal();
  auto lasts = dag.maximal();
  for (auto i : firsts) {
    for (auto j : lasts) {
      if (i != j && w[i].vertex == w[j].vertex && w[i].inverse != w[j].inverse) {
        Word inner;
        for (std::size_t k = 0; k < w.size(); ++k) {
          if (k != i && k != j) {
            inner.push_back(w[k]);
          }
        }
        return std::pair{w[j], Element::from_word(g.graph_ptr(), inner)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline CyclicReduction cyclically_reduce(Element const& g) {
  Element h = g;
  // Stripped letters, outermost first.
  Word conj;
  while (auto s = detail::strip_one(h)) {
    conj.push_back(s->first);
    h = s->second;
  }
  // g = x1^-1 ... xk^-1 h xk ... x1, so u = xk ... x1.
  std::reverse(conj.begin(), conj.end());
  return {Element::from_word(g.graph_ptr(), conj), h};
}

inline bool is_non_split(Element const& g) {
  return g.graph().induced_subgraph_connected(g.support());
}

// Non-split, nontrivial, and no vertex outside the support commutes with the
// whole support.
inline bool is_strongly_non_split(Element const& g) {
  if (g.is_identity() || !is_non_split(g)) {
    return false;
  }
  auto const& gr = g.graph();
  VertexSet supp = g.support();
  for (Vertex v = 0; v < gr.size(); ++v) {
    if (!supp.contains(v) && !gr.neighbours(v).intersects(supp)) {
      return false;
    }
  }
  return true;
}

// All g with g^n = m. Roots of a geodesic power are cyclically reduced, so a
// non-cyclically-reduced m has none. The identity's only root is itself.
inline std::vector<Element> extract_nth_roots(Element const& m, std::size_t n,
                                              std::size_t cap = kDefaultCap) {
  if (n < 2) {
    throw PreconditionError("root degree must be at least 2");
  }
  if (m.is_identity()) {
    return {m};
  }
  if (m.length() % n != 0 || !is_cyclically_reduced(m)) {
    return {};
  }
  std::vector<Element> out;
  for (auto const& u : enumerate_geodesic_prefixes(m, m.length() / n, cap)) {
    if (power(u, n) == m) {
      out.push_back(u);
    }
  }
  return out;
}

inline bool is_primitive(Element const& g, std::size_t cap = kDefaultCap) {
  if (g.is_identity()) {
    throw PreconditionError("primitivity is undefined for the identity");
  }
  Element h = cyclically_reduce(g).h;
  std::size_t len = h.length();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d == 0 && !extract_nth_roots(h, len / d, cap).empty()) {
      return false;
    }
  }
  return true;
}

// Closure of {g} under g1 g2 -> g2 g1 over all geodesic splits g = g1 g2.
inline std::vector<Element> cyclic_conjugates(Element const& g,
                                              std::size_t cap = kDefaultCap) {
  std::set<Element> seen{g};
  std::deque<Element> todo{g};
  std::size_t visited = 0;
  while (!todo.empty()) {
    Element x = todo.front();
    todo.pop_front();
    auto dag = dependence_dag(x);
    dag.for_each_ideal(x.length(), cap, [&](std::size_t, auto const& ideal) {
      Word rotated = concat(dag.suffix_word(ideal), dag.prefix_word(ideal));
      Element y = Element::from_word(x.graph_ptr(), rotated);
      if (seen.insert(y).second) {
        if (++visited > cap) {
          throw CapExceeded(cap);
        }
        todo.push_back(y);
      }
      return true;
    });
  }
  return {seen.begin(), seen.end()};
}

inline bool are_conjugate_cyclically_reduced(Element const& h1,
                                             Element const& h2,
                                             std::size_t cap = kDefaultCap) {
  if (!is_cyclically_reduced(h1) || !is_cyclically_reduced(h2)) {
    throw PreconditionError("conjugacy test needs cyclically reduced input");
  }
  if (h1.length() != h2.length() || h1.support() != h2.support()) {
    return false;
  }
  auto cc = cyclic_conjugates(h1, cap);
  return std::binary_search(cc.begin(), cc.end(), h2);
}

// Conjugacy of arbitrary elements through their cyclic cores.
inline bool are_conjugate(Element const& g1, Element const& g2,
                          std::size_t cap = kDefaultCap) {
  return are_conjugate_cyclically_reduced(cyclically_reduce(g1).h,
                                          cyclically_reduce(g2).h, cap);
}

}  // namespace raag

#endif  // RAAG_STRUCTURE_HPP_
