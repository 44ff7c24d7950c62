#ifndef RAAG_ELEMENT_HPP_
#define RAAG_ELEMENT_HPP_

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dag.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "word.hpp"

namespace raag {

namespace detail {

// Lexicographically largest linearization of the dependence DAG of a
// reduced word under the extended letter order. Two letters available at the
// same time never share a vertex, so picking the largest available letter
// each step is well defined.
inline Word lexmax_linearization(DependenceDag const& dag,
                                 VertexOrder const& order) {
  std::vector<std::size_t> pending(dag.size());
  using Entry = std::pair<std::uint32_t, std::size_t>;
  std::priority_queue<Entry> ready;
  for (std::size_t j = 0; j < dag.size(); ++j) {
    pending[j] = dag.predecessors(j).size();
    if (pending[j] == 0) {
      ready.emplace(dag.word()[j].rank(order), j);
    }
  }
  Word out;
  out.reserve(dag.size());
  while (!ready.empty()) {
    std::size_t j = ready.top().second;
    ready.pop();
    out.push_back(dag.word()[j]);
    for (auto k : dag.successors(j)) {
      if (--pending[k] == 0) {
        ready.emplace(dag.word()[k].rank(order), k);
      }
    }
  }
  return out;
}

inline Word normal_word(DefiningGraph const& g, Word reduced,
                        VertexOrder const& order) {
  return lexmax_linearization(DependenceDag(g, std::move(reduced)), order);
}

inline void require_same_graph(GraphPtr const& a, GraphPtr const& b) {
  if (a != b && !(a && b && *a == *b)) {
    throw GraphMismatch();
  }
}

}  // namespace detail

// An element of G(Gamma). The stored word is the CGW normal form under the
// graph's default vertex order, so equal elements have identical words.
class Element {
 public:
  Element() = default;

  explicit Element(GraphPtr graph) : graph_(std::move(graph)) {}

  static Element from_word(GraphPtr graph, Word const& w) {
    for (auto x : w) {
      if (x.vertex >= graph->size()) {
        throw Error("letter refers to a vertex outside the graph");
      }
    }
    Word r = multiply_reduced(*graph, {}, w);
    return from_reduced(std::move(graph), std::move(r));
  }

  static Element parse(GraphPtr graph, std::string_view text) {
    Word w = parse_word(*graph, text);
    return from_word(std::move(graph), w);
  }

  static Element letter(GraphPtr graph, Vertex v, bool inverse = false) {
    return from_word(std::move(graph), Word{Letter{v, inverse}});
  }

  GraphPtr const& graph_ptr() const noexcept { return graph_; }
  DefiningGraph const& graph() const { return *graph_; }
  Word const& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool is_identity() const noexcept { return word_.empty(); }
  VertexSet support() const { return letters_support(word_); }

  Element inverse() const { return from_word(graph_, raag::inverse(word_)); }

  std::string str() const { return to_string(*graph_, word_); }

  friend Element operator*(Element const& a, Element const& b) {
    detail::require_same_graph(a.graph_, b.graph_);
    return from_reduced(a.graph_, multiply_reduced(*a.graph_, a.word_, b.word_));
  }

  friend bool operator==(Element const& a, Element const& b) {
    detail::require_same_graph(a.graph_, b.graph_);
    bool same = a.word_ == b.word_;
    assert(same == multiply_reduced(*a.graph_, a.word_, raag::inverse(b.word_))
                       .empty());
    return same;
  }

  // Shortlex on the canonical words; used only for stable listings.
  friend bool operator<(Element const& a, Element const& b) {
    if (a.length() != b.length()) {
      return a.length() < b.length();
    }
    return a.word_ < b.word_;
  }

 private:
  static Element from_reduced(GraphPtr graph, Word reduced) {
    Element e(std::move(graph));
    e.word_ = detail::normal_word(*e.graph_, std::move(reduced),
                                  VertexOrder::of(*e.graph_));
    return e;
  }

  GraphPtr graph_;
  Word word_;
};

// Equality through free cancellation of g1 g2^-1, independent of the
// canonical representative.
inline bool equal_by_reduction(Element const& a, Element const& b) {
  detail::require_same_graph(a.graph_ptr(), b.graph_ptr());
  return multiply_reduced(a.graph(), a.word(), inverse(b.word())).empty();
}

inline Element power(Element const& g, std::size_t n) {
  Element out(g.graph_ptr());
  for (std::size_t i = 0; i < n; ++i) {
    out = out * g;
  }
  return out;
}

inline bool disjointly_commute(Element const& a, Element const& b) {
  detail::require_same_graph(a.graph_ptr(), b.graph_ptr());
  VertexSet sa = a.support();
  VertexSet sb = b.support();
  if (sa.intersects(sb)) {
    return false;
  }
  for (Vertex x : sa.to_vector()) {
    if (a.graph().neighbours(x).intersects(sb)) {
      return false;
    }
  }
  return true;
}

inline bool is_geodesic(std::span<Element const> parts) {
  if (parts.empty()) {
    return true;
  }
  Element product(parts.front().graph_ptr());
  std::size_t total = 0;
  for (auto const& p : parts) {
    product = product * p;
    total += p.length();
  }
  return product.length() == total;
}

inline bool is_geodesic(std::initializer_list<Element> parts) {
  return is_geodesic(std::span<Element const>(parts.begin(), parts.size()));
}

inline DependenceDag dependence_dag(Element const& g) {
  return DependenceDag(g.graph(), g.word());
}

// u^-1 g when g = u . (u^-1 g) is geodesic, nothing otherwise.
inline std::optional<Element> left_quotient(Element const& u, Element const& g) {
  Element rest = u.inverse() * g;
  if (rest.length() + u.length() != g.length()) {
    return std::nullopt;
  }
  return rest;
}

// g u^-1 when g = (g u^-1) . u is geodesic, nothing otherwise.
inline std::optional<Element> right_quotient(Element const& g, Element const& u) {
  Element rest = g * u.inverse();
  if (rest.length() + u.length() != g.length()) {
    return std::nullopt;
  }
  return rest;
}

// {u : g = u . v geodesic, |u| = d}, in shortlex order.
inline std::vector<Element> enumerate_geodesic_prefixes(
    Element const& g, std::size_t d, std::size_t cap = kDefaultCap) {
  if (d > g.length()) {
    throw PreconditionError("prefix length exceeds |g|");
  }
  if (cap == 0) {
    throw PreconditionError("cap must be positive");
  }
  auto dag = dependence_dag(g);
  std::vector<Element> out;
  for (auto const& ideal : dag.ideals_of_size(d, cap)) {
    out.push_back(Element::from_word(g.graph_ptr(), dag.prefix_word(ideal)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// {v : g = u . v geodesic, |v| = d}.
inline std::vector<Element> enumerate_geodesic_suffixes(
    Element const& g, std::size_t d, std::size_t cap = kDefaultCap) {
  auto pre = enumerate_geodesic_prefixes(g.inverse(), d, cap);
  std::vector<Element> out;
  out.reserve(pre.size());
  for (auto const& u : pre) {
    out.push_back(u.inverse());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace raag

#endif  // RAAG_ELEMENT_HPP_
