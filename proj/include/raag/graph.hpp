#ifndef RAAG_GRAPH_HPP_
#define RAAG_GRAPH_HPP_

// The defining graph of G(Gamma). Adjacent vertices do NOT commute; every
// non-adjacent pair of distinct vertices does.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace raag {

using Vertex = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 64;

// A set of vertices of one graph, stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  // Members in increasing index order.
  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Vertex>(std::countr_zero(b)));
    }
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

class DefiningGraph {
 public:
  DefiningGraph() = default;

  DefiningGraph(std::vector<std::string> names,
                std::vector<std::pair<Vertex, Vertex>> const& edges)
      : names_(std::move(names)), adjacent_(names_.size(), 0) {
    if (names_.size() > kMaxVertices) {
      throw Error("at most " + std::to_string(kMaxVertices)
                  + " vertices are supported");
    }
    for (Vertex v = 0; v < names_.size(); ++v) {
      if (!index_.emplace(names_[v], v).second) {
        throw Error("duplicate vertex '" + names_[v] + "'");
      }
    }
    for (auto [a, b] : edges) {
      add_edge(a, b);
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::string const& name(Vertex v) const { return names_.at(v); }

  Vertex vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      throw UnknownVertex(std::string(name));
    }
    return it->second;
  }

  bool has_vertex(std::string_view name) const {
    return index_.contains(std::string(name));
  }

  VertexSet all() const {
    return VertexSet(size() == 64 ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << size()) - 1);
  }

  bool adjacent(Vertex a, Vertex b) const {
    check(a);
    check(b);
    return (adjacent_[a] >> b) & 1U;
  }

  VertexSet neighbours(Vertex v) const {
    check(v);
    return VertexSet(adjacent_[v]);
  }

  // Vertices whose letters commute with letters of v: everything that is
  // neither v nor adjacent to v.
  VertexSet commuting_with(Vertex v) const {
    check(v);
    VertexSet s(all().bits() & ~adjacent_[v]);
    s.erase(v);
    return s;
  }

  // A vertex never commutes with itself as a letter.
  bool commutes(Vertex a, Vertex b) const {
    return a != b && !adjacent(a, b);
  }

  // Edges as (lo, hi) index pairs in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex a = 0; a < size(); ++a) {
      for (Vertex b = a + 1; b < size(); ++b) {
        if (adjacent(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  // Connectivity of the subgraph induced on `s`. The empty set counts as
  // connected.
  bool induced_subgraph_connected(VertexSet s) const {
    if (!s.subset_of(all())) {
      throw Error("vertex set is not contained in the graph");
    }
    if (s.empty()) {
      return true;
    }
    auto first = static_cast<Vertex>(std::countr_zero(s.bits()));
    VertexSet seen;
    seen.insert(first);
    std::vector<Vertex> stack{first};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : (neighbours(v) & s).to_vector()) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    return seen == s;
  }

  bool is_connected() const { return induced_subgraph_connected(all()); }

  friend bool operator==(DefiningGraph const& x, DefiningGraph const& y) {
    return x.names_ == y.names_ && x.adjacent_ == y.adjacent_;
  }

 private:
  void check(Vertex v) const {
    if (v >= size()) {
      throw Error("vertex index " + std::to_string(v) + " out of range");
    }
  }

  void add_edge(Vertex a, Vertex b) {
    check(a);
    check(b);
    if (a == b) {
      throw Error("loop edge at '" + names_[a] + "'");
    }
    if ((adjacent_[a] >> b) & 1U) {
      throw Error("repeated edge " + names_[a] + "-" + names_[b]);
    }
    adjacent_[a] |= std::uint64_t{1} << b;
    adjacent_[b] |= std::uint64_t{1} << a;
  }

  std::vector<std::string> names_;
  std::vector<std::uint64_t> adjacent_;
  std::unordered_map<std::string, Vertex> index_;
};

using GraphPtr = std::shared_ptr<DefiningGraph const>;

// A linear order on the vertices. The extension to letters places each
// generator immediately before its inverse.
class VertexOrder {
 public:
  VertexOrder() = default;

  // `sequence` lists the vertices from smallest to largest.
  explicit VertexOrder(std::vector<Vertex> sequence)
      : sequence_(std::move(sequence)), rank_(sequence_.size()) {
    std::vector<bool> seen(sequence_.size(), false);
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
      Vertex v = sequence_[i];
      if (v >= sequence_.size() || seen[v]) {
        throw Error("vertex order is not a permutation");
      }
      seen[v] = true;
      rank_[v] = static_cast<std::uint32_t>(i);
    }
  }

  // Index order, i.e. the order in which the graph file lists vertices.
  static VertexOrder natural(std::size_t n) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    return VertexOrder(std::move(seq));
  }

  static VertexOrder of(DefiningGraph const& g) { return natural(g.size()); }

  static VertexOrder from_names(DefiningGraph const& g,
                                std::vector<std::string> const& names) {
    if (names.size() != g.size()) {
      throw Error("vertex order must list every vertex exactly once");
    }
    std::vector<Vertex> seq;
    seq.reserve(names.size());
    for (auto const& n : names) {
      seq.push_back(g.vertex(n));
    }
    return VertexOrder(std::move(seq));
  }

  std::size_t size() const noexcept { return sequence_.size(); }
  std::uint32_t rank(Vertex v) const { return rank_.at(v); }
  bool less(Vertex a, Vertex b) const { return rank(a) < rank(b); }
  std::vector<Vertex> const& sequence() const noexcept { return sequence_; }

  // Smallest member of a non-empty set.
  Vertex min_of(VertexSet s) const {
    for (Vertex v : sequence_) {
      if (s.contains(v)) {
        return v;
      }
    }
    throw Error("min_of on an empty vertex set");
  }

  friend bool operator==(VertexOrder const& a, VertexOrder const& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::uint32_t> rank_;
};

inline bool valid_vertex_name(std::string_view name) {
  static std::regex const pattern("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(name.begin(), name.end(), pattern);
}

// Reads the text format
//
//   vertices: v1 v2 v3
//   edges: v1-v2 v2-v3
//
// `#` starts a comment. The `edges:` line may be omitted for an edgeless
// graph. The vertex listing order becomes the default vertex order.
inline DefiningGraph parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::uint64_t> seen_edges;
  bool have_vertices = false;
  bool have_edges = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream line(raw);
    std::string key;
    if (!(line >> key)) {
      continue;
    }
    if (key == "vertices:") {
      if (have_vertices) {
        throw ParseError("second 'vertices:' line", line_no);
      }
      have_vertices = true;
      std::string name;
      while (line >> name) {
        if (!valid_vertex_name(name)) {
          throw ParseError("malformed vertex name '" + name + "'", line_no);
        }
        if (names.size() == kMaxVertices) {
          throw ParseError("too many vertices", line_no);
        }
        auto v = static_cast<Vertex>(names.size());
        if (!index.emplace(name, v).second) {
          throw ParseError("duplicate vertex '" + name + "'", line_no);
        }
        names.push_back(name);
      }
      seen_edges.assign(names.size(), 0);
    } else if (key == "edges:") {
      if (!have_vertices) {
        throw ParseError("'edges:' before 'vertices:'", line_no);
      }
      if (have_edges) {
        throw ParseError("second 'edges:' line", line_no);
      }
      have_edges = true;
      std::string tok;
      while (line >> tok) {
        auto dash = tok.find('-');
        if (dash == std::string::npos || tok.find('-', dash + 1) != std::string::npos) {
          throw ParseError("malformed edge '" + tok + "'", line_no);
        }
        std::string a = tok.substr(0, dash);
        std::string b = tok.substr(dash + 1);
        for (auto const* end : {&a, &b}) {
          if (!valid_vertex_name(*end)) {
            throw ParseError("malformed edge '" + tok + "'", line_no);
          }
          if (!index.contains(*end)) {
            throw ParseError("unknown endpoint '" + *end + "'", line_no);
          }
        }
        Vertex va = index[a];
        Vertex vb = index[b];
        if (va == vb) {
          throw ParseError("loop edge '" + tok + "'", line_no);
        }
        if ((seen_edges[va] >> vb) & 1U) {
          throw ParseError("repeated edge '" + tok + "'", line_no);
        }
        seen_edges[va] |= std::uint64_t{1} << vb;
        seen_edges[vb] |= std::uint64_t{1} << va;
        edges.emplace_back(va, vb);
      }
    } else {
      throw ParseError("expected 'vertices:' or 'edges:', got '" + key + "'",
                       line_no);
    }
  }
  if (!have_vertices) {
    throw ParseError("missing 'vertices:' line", line_no);
  }
  return DefiningGraph(std::move(names), edges);
}

inline std::string serialize(DefiningGraph const& g) {
  std::string out = "vertices:";
  for (auto const& n : g.names()) {
    out += ' ';
    out += n;
  }
  out += "\nedges:";
  for (auto [a, b] : g.edges()) {
    out += ' ';
    out += g.name(a);
    out += '-';
    out += g.name(b);
  }
  out += '\n';
  return out;
}

inline GraphPtr make_graph(std::string_view text) {
  return std::make_shared<DefiningGraph const>(parse_graph(text));
}

// Path graph v1 - v2 - ... - vn.
inline GraphPtr path_graph(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i + 1));
    if (i > 0) {
      edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    }
  }
  return std::make_shared<DefiningGraph const>(std::move(names), edges);
}

}  // namespace raag

#endif  // RAAG_GRAPH_HPP_
