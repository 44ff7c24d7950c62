#ifndef RAAG_NORMAL_FORM_HPP_
#define RAAG_NORMAL_FORM_HPP_

// Starting generators, conical elements, CGW normal forms and conical
// conjugates.

#include <algorithm>
#include <optional>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "structure.hpp"

namespace raag {

// S(g): vertices v such that g = v^e h is geodesic, read off the size-one
// geodesic prefixes. Empty iff g is the identity.
inline VertexSet starting_generators(Element const& g) {
  auto dag = dependence_dag(g);
  VertexSet s;
  for (auto pos : dag.extensions(dag.empty_ideal())) {
    s.insert(dag.word()[pos].vertex);
  }
  return s;
}

inline bool is_conical(Element const& g) {
  return starting_generators(g).size() == 1;
}

inline Vertex apex(Element const& g) {
  VertexSet s = starting_generators(g);
  if (s.size() != 1) {
    throw PreconditionError("apex of a non-conical element");
  }
  return s.to_vector().front();
}

// Conical with apex the smallest vertex of the support.
inline bool is_pyramidal(Element const& g, VertexOrder const& order) {
  return is_conical(g) && apex(g) == order.min_of(g.support());
}

// Conical, and the apex is adjacent to every smaller vertex of the graph.
inline bool is_sd_conical(Element const& g, VertexOrder const& order) {
  if (!is_conical(g)) {
    return false;
  }
  Vertex top = apex(g);
  VertexSet nb = g.graph().neighbours(top);
  for (Vertex v : order.sequence()) {
    if (v == top) {
      return true;
    }
    if (!nb.contains(v)) {
      return false;
    }
  }
  return true;
}

// sigma(g): repeatedly emit the largest starting generator of what remains.
// This is the lexicographically largest reduced word for g.
inline Word normal_form(Element const& g, VertexOrder const& order) {
  return detail::lexmax_linearization(dependence_dag(g), order);
}

inline Word normal_form(Element const& g) {
  return normal_form(g, VertexOrder::of(g.graph()));
}

// A reduced word is normal when each suffix starts with the largest starting
// generator of the element it represents.
inline bool is_normal_word(GraphPtr const& g, Word const& w,
                           VertexOrder const& order) {
  if (!is_reduced(*g, w)) {
    return false;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    VertexSet s = starting_generators(Element::from_word(g, suffix));
    Vertex largest = s.to_vector().front();
    for (Vertex v : s.to_vector()) {
      if (order.less(largest, v)) {
        largest = v;
      }
    }
    if (w[i].vertex != largest) {
      return false;
    }
  }
  return true;
}

struct TailDecomposition {
  Element t;  // v is not in supp(t)
  Element p;  // v-conical
};

// h = t . p geodesic with p v-conical and v outside supp(t): p is the upward
// closure of the first occurrence of v in the dependence DAG.
inline TailDecomposition tail_conical_decomposition(Element const& h, Vertex v) {
  if (!h.support().contains(v)) {
    throw PreconditionError("vertex is not in the support");
  }
  if (!is_non_split(h)) {
    throw PreconditionError("tail decomposition needs a non-split element");
  }
  auto dag = dependence_dag(h);
  auto const& w = dag.word();
  std::size_t first = 0;
  while (w[first].vertex != v) {
    ++first;
  }
  auto upper = dag.upward_closure(first);
  Word t;
  Word p;
  for (std::size_t j = 0; j < w.size(); ++j) {
    (upper[j] ? p : t).push_back(w[j]);
  }
  return {Element::from_word(h.graph_ptr(), t),
          Element::from_word(h.graph_ptr(), p)};
}

// g = a p a^-1 = b^-1 p b with g^k = a b geodesic and p v0-conical.
struct ConicalConjugateResult {
  Element p;
  Element a;
  Element b;
  std::size_t k = 0;
  Vertex v0 = 0;
};

inline ConicalConjugateResult conical_conjugate(Element const& g, Vertex v0) {
  if (!g.support().contains(v0)) {
    throw PreconditionError("apex candidate is not in the support");
  }
  if (!is_non_split(g)) {
    throw PreconditionError("conical conjugate needs a non-split element");
  }
  if (!is_cyclically_reduced(g)) {
    throw PreconditionError("conical conjugate needs a cyclically reduced element");
  }
  auto const gp = g.graph_ptr();
  ConicalConjugateResult r{g, Element(gp), Element(gp), 0, v0};
  std::size_t const limit = g.graph().size() - 1;
  while (!(is_conical(r.p) && apex(r.p) == v0)) {
    if (r.k == limit) {
      throw InternalError("conical conjugate did not settle within |V|-1 steps");
    }
    auto [t, p] = tail_conical_decomposition(r.p, v0);
    r.a = r.a * t;
    r.b = p * r.b;
    r.p = p * t;
    ++r.k;
  }
  return r;
}

struct PairOrder {
  VertexOrder order;
  Vertex v1 = 0;
  Vertex v2 = 0;
};

namespace detail {

inline VertexOrder order_with_front(DefiningGraph const& g,
                                    std::vector<Vertex> const& front) {
  std::vector<Vertex> seq = front;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (std::find(front.begin(), front.end(), v) == front.end()) {
      seq.push_back(v);
    }
  }
  return VertexOrder(std::move(seq));
}

}  // namespace detail

// A vertex order and apexes making both conical conjugates SD-conical.
// Shared support: the least common vertex goes first. Otherwise the least
// adjacent pair (v1, v2) across the supports goes first, v1 before v2.
inline PairOrder choose_order_for_pair(Element const& g1, Element const& g2) {
  detail::require_same_graph(g1.graph_ptr(), g2.graph_ptr());
  for (auto const* g : {&g1, &g2}) {
    if (!is_strongly_non_split(*g)) {
      throw PreconditionError("order choice needs strongly non-split elements");
    }
    if (!is_cyclically_reduced(*g)) {
      throw PreconditionError("order choice needs cyclically reduced elements");
    }
  }
  auto const& gr = g1.graph();
  VertexSet common = g1.support() & g2.support();
  if (!common.empty()) {
    Vertex v0 = common.to_vector().front();
    return {detail::order_with_front(gr, {v0}), v0, v0};
  }
  for (Vertex v1 : g1.support().to_vector()) {
    for (Vertex v2 : g2.support().to_vector()) {
      if (gr.adjacent(v1, v2)) {
        return {detail::order_with_front(gr, {v1, v2}), v1, v2};
      }
    }
  }
  throw InternalError("strongly non-split supports with no edge across");
}

}  // namespace raag

#endif  // RAAG_NORMAL_FORM_HPP_
