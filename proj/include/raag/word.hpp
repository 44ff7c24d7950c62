#ifndef RAAG_WORD_HPP_
#define RAAG_WORD_HPP_

// Letters and words over V(Gamma)^{+-1}, with the textual token format
// `v2 v3^-1` (empty text is the empty word).

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace raag {

struct Letter {
  Vertex vertex = 0;
  bool inverse = false;

  Letter inverted() const { return Letter{vertex, !inverse}; }

  // Position in the extended order v1 < v1^-1 < v2 < v2^-1 < ...
  std::uint32_t rank(VertexOrder const& order) const {
    return 2 * order.rank(vertex) + (inverse ? 1 : 0);
  }

  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

inline Word inverse(Word const& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverted());
  }
  return out;
}

inline Word concat(Word a, Word const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word repeat(Word const& w, std::size_t n) {
  Word out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

inline VertexSet letters_support(Word const& w) {
  VertexSet s;
  for (auto x : w) {
    s.insert(x.vertex);
  }
  return s;
}

// Lexicographic comparison under the extended letter order.
inline bool lex_less(Word const& a, Word const& b, VertexOrder const& order) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [&](Letter x, Letter y) { return x.rank(order) < y.rank(order); });
}

namespace detail {

class WordParser {
 public:
  WordParser(DefiningGraph const& g, std::string_view text) : g_(g), text_(text) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return w;
  }

 private:
  Word sequence() {
    Word w;
    while (true) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') {
        return w;
      }
      Word item = factor();
      w.insert(w.end(), item.begin(), item.end());
    }
  }

  Word factor() {
    Word base;
    if (text_[pos_] == '(') {
      ++pos_;
      base = sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') {
        fail("missing ')'");
      }
      ++pos_;
    } else {
      std::size_t begin = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_]))
                                     || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(begin, pos_ - begin));
      if (!valid_vertex_name(name)) {
        fail("malformed letter '" + name + "'");
      }
      base.push_back({g_.vertex(name), false});
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return raise(base, exponent());
    }
    return base;
  }

  long exponent() {
    std::size_t begin = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string_view e = text_.substr(begin, pos_ - begin);
    if (!e.empty() && e.front() == '+') {
      e.remove_prefix(1);
    }
    long k = 0;
    auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), k);
    if (e.empty() || ec != std::errc() || ptr != e.data() + e.size() || k == 0) {
      fail("malformed exponent '" + std::string(text_.substr(begin, pos_ - begin)) + "'");
    }
    return k;
  }

  static Word raise(Word const& base, long k) {
    Word unit = base;
    if (k < 0) {
      std::reverse(unit.begin(), unit.end());
      for (auto& x : unit) {
        x.inverse = !x.inverse;
      }
    }
    Word out;
    for (long i = 0; i < std::labs(k); ++i) {
      out.insert(out.end(), unit.begin(), unit.end());
    }
    return out;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError(what + " in word '" + std::string(text_) + "'");
  }

  DefiningGraph const& g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Letters are `name` or `name^k` for a nonzero integer k (so `v3^-1` is an
// inverse letter); `( ... )^k` raises a group. Nothing is reduced.
inline Word parse_word(DefiningGraph const& g, std::string_view text) {
  return detail::WordParser(g, text).parse();
}

inline std::string to_string(DefiningGraph const& g, Letter x) {
  return x.inverse ? g.name(x.vertex) + "^-1" : g.name(x.vertex);
}

inline std::string to_string(DefiningGraph const& g, Word const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += to_string(g, w[i]);
  }
  return out;
}

// Leftmost (then shortest) innermost cancellation: positions i < j with
// w[j] = w[i]^-1, every letter strictly between commuting with the vertex
// of w[i]. A word is reduced iff there is none.
inline std::optional<std::pair<std::size_t, std::size_t>>
find_innermost_cancellation(DefiningGraph const& g, Word const& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    Vertex v = w[i].vertex;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].vertex == v) {
        if (w[j].inverse != w[i].inverse) {
          return std::pair{i, j};
        }
        break;
      }
      if (!g.commutes(v, w[j].vertex)) {
        break;
      }
    }
  }
  return std::nullopt;
}

// Deletes innermost cancellations one at a time, always the one returned by
// find_innermost_cancellation; surviving letters keep their relative order.
inline Word reduce(DefiningGraph const& g, Word w) {
  while (auto c = find_innermost_cancellation(g, w)) {
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(c->second));
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(c->first));
  }
  return w;
}

inline bool is_reduced(DefiningGraph const& g, Word const& w) {
  return !find_innermost_cancellation(g, w).has_value();
}

// Appends x to the reduced word r, keeping r reduced. If r.x is not reduced
// the cancellation involves x and the nearest letter of the same vertex
// reachable through commuting letters.
inline void append_reduced(DefiningGraph const& g, Word& r, Letter x) {
  for (std::size_t k = r.size(); k-- > 0;) {
    if (r[k].vertex == x.vertex) {
      if (r[k].inverse != x.inverse) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
        return;
      }
      break;
    }
    if (!g.commutes(r[k].vertex, x.vertex)) {
      break;
    }
  }
  r.push_back(x);
}

// Product of a reduced word with an arbitrary word, as a reduced word.
inline Word multiply_reduced(DefiningGraph const& g, Word r, Word const& w) {
  for (auto x : w) {
    append_reduced(g, r, x);
  }
  return r;
}

}  // namespace raag

#endif  // RAAG_WORD_HPP_
