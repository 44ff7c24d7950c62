#ifndef RAAG_DAG_HPP_
#define RAAG_DAG_HPP_

// Dependence DAG of a reduced word: one node per letter position, an edge
// i -> j (i < j) whenever the letters at i and j do not commute (letters of
// the same vertex never commute). Downward-closed position sets are exactly
// the geodesic prefixes of the element.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "word.hpp"

namespace raag {

class DependenceDag {
 public:
  // A downward-closed set, stored as the number of letters of each vertex it
  // contains. Occurrences of one vertex form a chain, so this is faithful.
  using Ideal = std::vector<std::uint32_t>;

  DependenceDag(DefiningGraph const& g, Word w)
      : graph_(&g),
        word_(std::move(w)),
        preds_(word_.size()),
        succs_(word_.size()),
        positions_(g.size()),
        rank_in_vertex_(word_.size()) {
    std::vector<std::ptrdiff_t> latest(g.size(), -1);
    for (std::size_t j = 0; j < word_.size(); ++j) {
      Vertex v = word_[j].vertex;
      for (Vertex u = 0; u < g.size(); ++u) {
        if (latest[u] >= 0 && !g.commutes(u, v)) {
          auto i = static_cast<std::size_t>(latest[u]);
          preds_[j].push_back(i);
          succs_[i].push_back(j);
        }
      }
      latest[v] = static_cast<std::ptrdiff_t>(j);
      rank_in_vertex_[j] = static_cast<std::uint32_t>(positions_[v].size());
      positions_[v].push_back(j);
    }
  }

  std::size_t size() const noexcept { return word_.size(); }
  Word const& word() const noexcept { return word_; }
  DefiningGraph const& graph() const noexcept { return *graph_; }

  // Generating edges: for each non-commuting vertex, the latest earlier
  // occurrence. Their transitive closure is the dependence order.
  std::vector<std::size_t> const& predecessors(std::size_t j) const {
    return preds_.at(j);
  }
  std::vector<std::size_t> const& successors(std::size_t i) const {
    return succs_.at(i);
  }

  // Every pair i < j whose letters do not commute.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i + 1; j < size(); ++j) {
        if (!graph_->commutes(word_[i].vertex, word_[j].vertex)) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  // Positions with no predecessor.
  std::vector<std::size_t> minimal() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j) {
      if (preds_[j].empty()) {
        out.push_back(j);
      }
    }
    return out;
  }

  // Positions with no successor.
  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j) {
      if (succs_[j].empty()) {
        out.push_back(j);
      }
    }
    return out;
  }

  // Membership mask of everything reachable from `start`, itself included.
  std::vector<bool> upward_closure(std::size_t start) const {
    std::vector<bool> in(size(), false);
    in.at(start) = true;
    for (std::size_t j = start; j < size(); ++j) {
      if (!in[j]) {
        continue;
      }
      for (auto k : succs_[j]) {
        in[k] = true;
      }
    }
    return in;
  }

  Ideal empty_ideal() const { return Ideal(graph_->size(), 0); }

  bool contains(Ideal const& ideal, std::size_t pos) const {
    return rank_in_vertex_[pos] < ideal[word_[pos].vertex];
  }

  // Positions that can be added to `ideal` keeping it downward closed.
  std::vector<std::size_t> extensions(Ideal const& ideal) const {
    std::vector<std::size_t> out;
    for (Vertex u = 0; u < graph_->size(); ++u) {
      if (ideal[u] >= positions_[u].size()) {
        continue;
      }
      std::size_t pos = positions_[u][ideal[u]];
      bool ok = true;
      for (auto p : preds_[pos]) {
        if (!contains(ideal, p)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(pos);
      }
    }
    return out;
  }

  Ideal with(Ideal ideal, std::size_t pos) const {
    ++ideal[word_[pos].vertex];
    return ideal;
  }

  // Letters of the ideal, in word order: a reduced word for the prefix.
  Word prefix_word(Ideal const& ideal) const {
    Word out;
    for (std::size_t j = 0; j < size(); ++j) {
      if (contains(ideal, j)) {
        out.push_back(word_[j]);
      }
    }
    return out;
  }

  // Letters outside the ideal: a reduced word for the matching suffix.
  Word suffix_word(Ideal const& ideal) const {
    Word out;
    for (std::size_t j = 0; j < size(); ++j) {
      if (!contains(ideal, j)) {
        out.push_back(word_[j]);
      }
    }
    return out;
  }

  // All ideals of size d, in canonical (lexicographic count-vector) order.
  // Throws CapExceeded once more than `cap` sets have been visited.
  std::vector<Ideal> ideals_of_size(std::size_t d,
                                    std::size_t cap = kDefaultCap) const {
    if (d > size()) {
      throw PreconditionError("prefix size exceeds word length");
    }
    std::size_t visited = 1;
    std::set<Ideal> level{empty_ideal()};
    for (std::size_t k = 0; k < d; ++k) {
      level = next_level(level, visited, cap);
    }
    return {level.begin(), level.end()};
  }

  // Calls fn(size, ideal) for every ideal of size at most max_size, sizes in
  // increasing order. Stops early if fn returns false.
  template <typename Fn>
  void for_each_ideal(std::size_t max_size, std::size_t cap, Fn&& fn) const {
    std::size_t visited = 1;
    std::set<Ideal> level{empty_ideal()};
    for (std::size_t k = 0;; ++k) {
      for (auto const& ideal : level) {
        if (!fn(k, ideal)) {
          return;
        }
      }
      if (k == max_size || k == size()) {
        return;
      }
      level = next_level(level, visited, cap);
    }
  }

 private:
  std::set<Ideal> next_level(std::set<Ideal> const& level,
                             std::size_t& visited, std::size_t cap) const {
    std::set<Ideal> next;
    for (auto const& ideal : level) {
      for (auto pos : extensions(ideal)) {
        if (next.insert(with(ideal, pos)).second && ++visited > cap) {
          throw CapExceeded(cap);
        }
      }
    }
    return next;
  }

  DefiningGraph const* graph_;
  Word word_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::vector<std::size_t>> succs_;
  std::vector<std::vector<std::size_t>> positions_;
  std::vector<std::uint32_t> rank_in_vertex_;
};

}  // namespace raag

#endif  // RAAG_DAG_HPP_
