#ifndef RAAG_SEQWORDS_HPP_
#define RAAG_SEQWORDS_HPP_

// Periodicity and quasi-root matching for plain words over an alphabet
// X^{+-1}. Nothing here knows about defining graphs; free reduction is done
// locally so these checks stay independent of the group calculus.

#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace raag::seq {

// Nonzero; -x is the formal inverse of x.
using Symbol = int;
using SymbolWord = std::vector<Symbol>;

class InconsistentPeriods : public Error {
 public:
  using Error::Error;
};

// "abA" -> {1, 2, -1}: lowercase letters are symbols, uppercase their
// inverses.
inline SymbolWord symbols(std::string_view text) {
  SymbolWord w;
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      w.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      w.push_back(-(c - 'A' + 1));
    } else {
      throw ParseError(std::string("bad symbol '") + c + "'");
    }
  }
  return w;
}

inline std::string to_string(SymbolWord const& w) {
  std::string out;
  for (Symbol s : w) {
    out += s > 0 ? static_cast<char>('a' + s - 1)
                 : static_cast<char>('A' - s - 1);
  }
  return out;
}

inline SymbolWord inverse(SymbolWord const& w) {
  SymbolWord out(w.rbegin(), w.rend());
  for (auto& s : out) {
    s = -s;
  }
  return out;
}

inline SymbolWord cat(std::initializer_list<SymbolWord const*> parts) {
  SymbolWord out;
  for (auto const* p : parts) {
    out.insert(out.end(), p->begin(), p->end());
  }
  return out;
}

inline SymbolWord power(SymbolWord const& w, std::size_t n) {
  SymbolWord out;
  for (std::size_t i = 0; i < n; ++i) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

// w[r..] w[..r]
inline SymbolWord rotate(SymbolWord const& w, std::size_t r) {
  if (w.empty()) {
    return w;
  }
  r %= w.size();
  SymbolWord out(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

// Free reduction: cancel adjacent x x^-1 pairs.
inline SymbolWord free_reduce(SymbolWord const& w) {
  SymbolWord out;
  for (Symbol s : w) {
    if (!out.empty() && out.back() == -s) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

inline bool free_equal(SymbolWord const& x, SymbolWord const& y) {
  return free_reduce(x) == free_reduce(y);
}

inline bool has_period(SymbolWord const& w, std::size_t p) {
  for (std::size_t i = 0; i + p < w.size(); ++i) {
    if (w[i] != w[i + p]) {
      return false;
    }
  }
  return true;
}

// Two periodic sequences, of periods p and q, agreeing on their first p + q
// terms, coincide and have period gcd(p, q). `window` holds those terms;
// returns the gcd after checking the window against both periods.
inline std::size_t merge_periods(std::size_t p, std::size_t q,
                                 SymbolWord const& window) {
  if (p == 0 || q == 0) {
    throw PreconditionError("periods must be positive");
  }
  if (window.size() < p + q) {
    throw PreconditionError("window shorter than p + q");
  }
  if (!has_period(window, p) || !has_period(window, q)) {
    throw InconsistentPeriods("window is not consistent with both periods");
  }
  std::size_t d = std::gcd(p, q);
  // Both extensions are determined by the window; compare them over a full
  // common cycle.
  std::size_t horizon = window.size() + p * q;
  for (std::size_t i = 0; i < horizon; ++i) {
    Symbol x = window[i % p];
    if (x != window[i % q] || x != window[i % d]) {
      throw InternalError("periodic extensions disagree");
    }
  }
  return d;
}

inline bool seq_is_primitive(SymbolWord const& w) {
  if (w.empty()) {
    throw PreconditionError("primitivity is undefined for the empty word");
  }
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d == 0 && has_period(w, d)) {
      return false;
    }
  }
  return true;
}

// Whether the first n terms of w1 w1 w1 ... and w2 w2 w2 ... agree.
inline bool powers_agree(SymbolWord const& w1, SymbolWord const& w2,
                         std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (w1[i % w1.size()] != w2[i % w2.size()]) {
      return false;
    }
  }
  return true;
}

// Two primitive words, each of whose squares is a prefix of a power of the
// other, are equal. Returns w1 == w2; violated hypotheses throw.
inline bool common_root_check(SymbolWord const& w1, SymbolWord const& w2) {
  if (w1.empty() || w2.empty()) {
    throw PreconditionError("words must be nonempty");
  }
  if (!seq_is_primitive(w1) || !seq_is_primitive(w2)) {
    throw PreconditionError("words must be primitive");
  }
  if (!powers_agree(w1, w2, 2 * w1.size())) {
    throw PreconditionError("w1^2 is not a prefix of a power of w2");
  }
  if (!powers_agree(w1, w2, 2 * w2.size())) {
    throw PreconditionError("w2^2 is not a prefix of a power of w1");
  }
  return w1 == w2;
}

// w = prefix . root^power . suffix
struct WordDecomposition {
  SymbolWord prefix;
  SymbolWord root;
  std::size_t power = 0;
  SymbolWord suffix;

  SymbolWord expand() const {
    SymbolWord mid = seq::power(root, power);
    return cat({&prefix, &mid, &suffix});
  }
};

struct MatchReport {
  enum class Status { ok, precondition_failed, conclusion_failed };

  Status status = Status::ok;
  std::vector<std::string> failed;  // names of violated hypotheses/conclusions
  std::size_t rotation = 0;         // root1 == rotate(root2, rotation)
  bool rotation_ok = false;
  bool left_identity = false;   // a1 w1 a1^-1 = a2 w2 a2^-1 in the free group
  bool right_identity = false;  // b1^-1 w1 b1 = b2^-1 w2 b2 in the free group

  bool ok() const { return status == Status::ok; }
};

// Two decompositions w = a1 w1^m1 b1 = a2 w2^m2 b2 with primitive roots,
// m_i >= 2, |a_i| <= A, |b_i| <= B and |w| - (A + B) >= 2|w_i| force w1 to be
// a rotation of w2, with matching conjugators in the free group.
inline MatchReport match_word_quasiroots(SymbolWord const& w,
                                         WordDecomposition const& d1,
                                         WordDecomposition const& d2,
                                         Rational const& A, Rational const& B) {
  MatchReport r;
  if (A < 0 || B < 0) {
    throw PreconditionError("A and B must be non-negative");
  }
  int i = 1;
  for (auto const* d : {&d1, &d2}) {
    std::string tag = std::to_string(i++);
    auto fail = [&](std::string const& what) {
      r.failed.push_back(what + "[" + tag + "]");
    };
    if (d->expand() != w) {
      fail("w == a w^m b");
    }
    if (d->power < 2) {
      fail("m >= 2");
    }
    if (d->root.empty() || !seq_is_primitive(d->root)) {
      fail("root primitive");
    }
    if (Rational(static_cast<std::int64_t>(d->prefix.size())) > A) {
      fail("|a| <= A");
    }
    if (Rational(static_cast<std::int64_t>(d->suffix.size())) > B) {
      fail("|b| <= B");
    }
    if (Rational(static_cast<std::int64_t>(w.size())) - (A + B)
        < Rational(2 * static_cast<std::int64_t>(d->root.size()))) {
      fail("|w| - (A+B) >= 2|w_i|");
    }
  }
  if (!r.failed.empty()) {
    r.status = MatchReport::Status::precondition_failed;
    return r;
  }

  std::size_t p = d1.root.size();
  if (p == d2.root.size()) {
    auto shift = static_cast<std::ptrdiff_t>(d1.prefix.size())
                 - static_cast<std::ptrdiff_t>(d2.prefix.size());
    auto pp = static_cast<std::ptrdiff_t>(p);
    r.rotation = static_cast<std::size_t>(((shift % pp) + pp) % pp);
    r.rotation_ok = rotate(d2.root, r.rotation) == d1.root;
  }
  SymbolWord a1i = inverse(d1.prefix);
  SymbolWord a2i = inverse(d2.prefix);
  SymbolWord b1i = inverse(d1.suffix);
  SymbolWord b2i = inverse(d2.suffix);
  r.left_identity = free_equal(cat({&d1.prefix, &d1.root, &a1i}),
                               cat({&d2.prefix, &d2.root, &a2i}));
  r.right_identity = free_equal(cat({&b1i, &d1.root, &d1.suffix}),
                                cat({&b2i, &d2.root, &d2.suffix}));
  if (!r.rotation_ok) {
    r.failed.push_back("cyclically conjugate roots");
  }
  if (!r.left_identity) {
    r.failed.push_back("a1 w1 a1^-1 = a2 w2 a2^-1");
  }
  if (!r.right_identity) {
    r.failed.push_back("b1^-1 w1 b1 = b2^-1 w2 b2");
  }
  if (!r.failed.empty()) {
    r.status = MatchReport::Status::conclusion_failed;
  }
  return r;
}

}  // namespace raag::seq

#endif  // RAAG_SEQWORDS_HPP_
