#ifndef RAAG_QUASIROOT_HPP_
#define RAAG_QUASIROOT_HPP_

// (lambda, N)-quasi-roots: h = a g^n b geodesic with n >= N and
// |a|, |b| <= lambda |h|.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "normal_form.hpp"
#include "rational.hpp"
#include "seqwords.hpp"
#include "structure.hpp"

namespace raag {

struct QuasiRootParams {
  Rational lambda{0};
  std::size_t N = 2;

  QuasiRootParams() = default;

  // `diagnostic` admits lambda = 1/2, outside the theory, to exhibit the
  // failure of uniqueness there.
  QuasiRootParams(Rational lam, std::size_t min_power, bool diagnostic = false)
      : lambda(lam), N(min_power) {
    if (lambda < 0 || lambda > Rational(1, 2)
        || (!diagnostic && lambda == Rational(1, 2))) {
      throw PreconditionError("lambda must lie in [0, 1/2)");
    }
    if (N < 2) {
      throw PreconditionError("N must be at least 2");
    }
  }

  // |x| <= lambda |h|, exactly.
  bool within(std::size_t x, std::size_t h_len) const {
    return Rational(static_cast<std::int64_t>(x))
           <= lambda * static_cast<std::int64_t>(h_len);
  }

  std::size_t affix_bound(std::size_t h_len) const {
    return static_cast<std::size_t>(
        floor(lambda * static_cast<std::int64_t>(h_len)));
  }
};

// The smallest N allowed by the uniqueness theorem: (2|V|+1)/(1-2 lambda)
// rounded up.
inline std::size_t theorem_min_power(std::size_t vertices, Rational lambda) {
  Rational bound = Rational(static_cast<std::int64_t>(2 * vertices + 1))
                   / (Rational(1) - 2 * lambda);
  return static_cast<std::size_t>(ceil(bound));
}

inline bool meets_theorem_bound(QuasiRootParams const& params,
                                std::size_t vertices) {
  return Rational(static_cast<std::int64_t>(params.N))
             * (Rational(1) - 2 * params.lambda)
         >= Rational(static_cast<std::int64_t>(2 * vertices + 1));
}

struct QuasiRootDecomposition {
  Element h;
  Element a;
  Element g;
  std::size_t n = 0;
  Element b;

  auto key() const { return std::tie(a, g, n, b); }

  friend bool operator<(QuasiRootDecomposition const& x,
                        QuasiRootDecomposition const& y) {
    return x.key() < y.key();
  }
  friend bool operator==(QuasiRootDecomposition const& x,
                         QuasiRootDecomposition const& y) {
    return x.h == y.h && x.a == y.a && x.g == y.g && x.n == y.n && x.b == y.b;
  }
};

// Named boolean checks, in evaluation order.
using Checklist = std::vector<std::pair<std::string, bool>>;

inline bool all_true(Checklist const& c) {
  return std::all_of(c.begin(), c.end(), [](auto const& e) { return e.second; });
}

inline std::vector<std::string> failures(Checklist const& c) {
  std::vector<std::string> out;
  for (auto const& [name, ok] : c) {
    if (!ok) {
      out.push_back(name);
    }
  }
  return out;
}

struct QuasiRootCheck {
  Checklist conditions;

  bool ok() const { return all_true(conditions); }
  std::vector<std::string> failed() const { return failures(conditions); }
};

inline QuasiRootCheck verify_quasi_root(QuasiRootParams const& params,
                                        Element const& h, Element const& a,
                                        Element const& g, std::size_t n,
                                        Element const& b) {
  for (auto const* x : {&a, &g, &b}) {
    detail::require_same_graph(h.graph_ptr(), x->graph_ptr());
  }
  QuasiRootCheck r;
  Element gn = power(g, n);
  r.conditions = {
      {"h = a g^n b", a * gn * b == h},
      {"geodesic", h.length() == a.length() + n * g.length() + b.length()},
      {"n >= N", n >= params.N},
      {"|a| <= lambda|h|", params.within(a.length(), h.length())},
      {"|b| <= lambda|h|", params.within(b.length(), h.length())},
  };
  return r;
}

inline QuasiRootCheck verify_quasi_root(QuasiRootParams const& params,
                                        QuasiRootDecomposition const& d) {
  return verify_quasi_root(params, d.h, d.a, d.g, d.n, d.b);
}

struct SearchOptions {
  bool nontrivial_only = true;
  std::size_t cap = kDefaultCap;
};

namespace detail {

// Removes the reduced word u from the front of the reduced word x when
// x = u . rest is geodesic. Each letter of u must be the first occurrence of
// its vertex in what is left, with every earlier remaining letter commuting
// with it.
class PrefixPeeler {
 public:
  PrefixPeeler(DefiningGraph const& g, Word const& x)
      : graph_(&g), x_(x), removed_(x.size(), false) {}

  bool peel(Word const& u) {
    std::vector<std::size_t> taken;
    for (auto y : u) {
      bool found = false;
      for (std::size_t k = start_; k < x_.size(); ++k) {
        if (removed_[k]) {
          continue;
        }
        if (x_[k].vertex == y.vertex) {
          if (x_[k].inverse == y.inverse) {
            removed_[k] = true;
            taken.push_back(k);
            found = true;
          }
          break;
        }
        if (!graph_->commutes(x_[k].vertex, y.vertex)) {
          break;
        }
      }
      if (!found) {
        for (auto k : taken) {
          removed_[k] = false;
        }
        return false;
      }
    }
    remaining_ -= u.size();
    while (start_ < x_.size() && removed_[start_]) {
      ++start_;
    }
    return true;
  }

  std::size_t remaining() const { return remaining_; }

  Word rest() const {
    Word out;
    for (std::size_t k = start_; k < x_.size(); ++k) {
      if (!removed_[k]) {
        out.push_back(x_[k]);
      }
    }
    return out;
  }

 private:
  DefiningGraph const* graph_;
  Word const& x_;
  std::vector<bool> removed_;
  std::size_t start_ = 0;
  std::size_t remaining_ = x_.size();
};

}  // namespace detail

// Exhaustive search. Every a is a geodesic prefix of h with |a| <= lambda|h|;
// every root g is a geodesic prefix of h' = a^-1 h, and g^n must peel off h'
// leaving b with |b| <= lambda|h|. Results are sorted by (a, g, n, b).
inline std::vector<QuasiRootDecomposition> find_quasi_roots(
    QuasiRootParams const& params, Element const& h,
    SearchOptions const& opts = {}) {
  auto const gp = h.graph_ptr();
  std::size_t const bound = params.affix_bound(h.length());
  std::vector<QuasiRootDecomposition> out;
  auto dag = dependence_dag(h);

  dag.for_each_ideal(bound, opts.cap, [&](std::size_t, auto const& ideal) {
    Word const a_word = dag.prefix_word(ideal);
    Word const rest = dag.suffix_word(ideal);
    std::size_t const len = rest.size();
    std::optional<Element> a;
    auto a_elem = [&]() -> Element const& {
      if (!a) {
        a = Element::from_word(gp, a_word);
      }
      return *a;
    };

    if (!opts.nontrivial_only && len <= bound) {
      out.push_back({h, a_elem(), Element(gp), params.N,
                     Element::from_word(gp, rest)});
    }

    DependenceDag rest_dag(*gp, rest);
    for (std::size_t ell = 1; params.N * ell <= len; ++ell) {
      // n ell >= len - bound keeps |b| in range.
      std::size_t min_n = params.N;
      if (len > bound) {
        min_n = std::max(min_n, (len - bound + ell - 1) / ell);
      }
      if (min_n * ell > len) {
        continue;
      }
      for (auto const& u_ideal : rest_dag.ideals_of_size(ell, opts.cap)) {
        Word const u = rest_dag.prefix_word(u_ideal);
        detail::PrefixPeeler peeler(*gp, rest);
        std::size_t n = 0;
        while (peeler.remaining() >= ell && peeler.peel(u)) {
          ++n;
          if (n >= min_n) {
            out.push_back({h, a_elem(), Element::from_word(gp, u), n,
                           Element::from_word(gp, peeler.rest())});
          }
        }
      }
    }
    return true;
  });

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](auto const& x, auto const& y) {
                          return !(x < y) && !(y < x);
                        }),
            out.end());
  return out;
}

// Outcome of a theorem-style check. When a hypothesis fails the conclusions
// are informational; when every hypothesis holds a failed conclusion is a
// counterexample to the theory.
struct CheckReport {
  enum class Status { ok, hypothesis_failed, theorem_violation };

  Status status = Status::ok;
  Checklist hypotheses;
  Checklist conclusions;

  bool ok() const { return status == Status::ok; }

  void settle() {
    if (!all_true(hypotheses)) {
      status = Status::hypothesis_failed;
    } else if (!all_true(conclusions)) {
      status = Status::theorem_violation;
    } else {
      status = Status::ok;
    }
  }
};

inline std::string to_string(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::ok:
      return "ok";
    case CheckReport::Status::hypothesis_failed:
      return "hypothesis_failed";
    case CheckReport::Status::theorem_violation:
      return "theorem_violation";
  }
  return "?";
}

inline bool lookup(Checklist const& c, std::string const& name) {
  for (auto const& [n, v] : c) {
    if (n == name) {
      return v;
    }
  }
  throw Error("no check named '" + name + "'");
}

struct UniquenessReport : CheckReport {
  bool left_conjugate_equal = false;   // a1 g1 a1^-1 = a2 g2 a2^-1
  bool right_conjugate_equal = false;  // b1^-1 g1 b1 = b2^-1 g2 b2
  bool roots_conjugate = false;
};

inline UniquenessReport check_uniqueness(QuasiRootParams const& params,
                                         QuasiRootDecomposition const& d1,
                                         QuasiRootDecomposition const& d2,
                                         std::size_t cap = kDefaultCap) {
  detail::require_same_graph(d1.h.graph_ptr(), d2.h.graph_ptr());
  auto const& gr = d1.h.graph();
  UniquenessReport r;
  auto primitive = [&](Element const& g) {
    return !g.is_identity() && is_primitive(g, cap);
  };
  r.hypotheses = {
      {"same h", d1.h == d2.h},
      {"decomposition 1 valid", verify_quasi_root(params, d1).ok()},
      {"decomposition 2 valid", verify_quasi_root(params, d2).ok()},
      {"graph connected", gr.is_connected()},
      {"N >= (2|V|+1)/(1-2 lambda)", meets_theorem_bound(params, gr.size())},
      {"g1 strongly non-split", is_strongly_non_split(d1.g)},
      {"g2 strongly non-split", is_strongly_non_split(d2.g)},
      {"g1 primitive", primitive(d1.g)},
      {"g2 primitive", primitive(d2.g)},
  };
  r.left_conjugate_equal = d1.a * d1.g * d1.a.inverse()
                           == d2.a * d2.g * d2.a.inverse();
  r.right_conjugate_equal = d1.b.inverse() * d1.g * d1.b
                            == d2.b.inverse() * d2.g * d2.b;
  r.roots_conjugate = are_conjugate(d1.g, d2.g, cap);
  r.conclusions = {
      {"a1 g1 a1^-1 = a2 g2 a2^-1", r.left_conjugate_equal},
      {"b1^-1 g1 b1 = b2^-1 g2 b2", r.right_conjugate_equal},
      {"g1 ~ g2", r.roots_conjugate},
  };
  r.settle();
  return r;
}

// h = a p^n b, without the lambda/N bookkeeping.
struct PowerDecomposition {
  Element a;
  Element p;
  std::size_t n = 0;
  Element b;
};

struct Step2Report : CheckReport {
  std::size_t rotation = 0;  // sigma(p1) = rotate(sigma(p2), rotation)
};

namespace detail {

inline seq::SymbolWord to_symbols(Word const& w) {
  seq::SymbolWord out;
  out.reserve(w.size());
  for (auto x : w) {
    auto s = static_cast<seq::Symbol>(x.vertex) + 1;
    out.push_back(x.inverse ? -s : s);
  }
  return out;
}

inline bool geodesic_power(Element const& h, PowerDecomposition const& d) {
  return d.a * power(d.p, d.n) * d.b == h
         && h.length() == d.a.length() + d.n * d.p.length() + d.b.length();
}

inline Rational len(Element const& e) {
  return Rational(static_cast<std::int64_t>(e.length()));
}

}  // namespace detail

// SD-conical quasi-roots: read sigma(h) through both factorisations
// sigma(a) sigma(p)^(n-1) sigma(p b) and match them as plain words, with
// A' = A and B' = B + max |p_i|.
inline Step2Report check_step2(Element const& h, PowerDecomposition const& d1,
                               PowerDecomposition const& d2, Rational const& A,
                               Rational const& B, VertexOrder const& order,
                               std::size_t cap = kDefaultCap) {
  Step2Report r;
  auto const& gr = h.graph();
  auto primitive = [&](Element const& p) {
    return !p.is_identity() && is_primitive(p, cap);
  };
  int i = 1;
  r.hypotheses.emplace_back("graph connected", gr.is_connected());
  for (auto const* d : {&d1, &d2}) {
    std::string tag = "[" + std::to_string(i++) + "]";
    r.hypotheses.emplace_back("geodesic decomposition" + tag,
                              detail::geodesic_power(h, *d));
    r.hypotheses.emplace_back("n >= 3" + tag, d->n >= 3);
    r.hypotheses.emplace_back("p strongly non-split" + tag,
                              is_strongly_non_split(d->p));
    r.hypotheses.emplace_back("p SD-conical" + tag, is_sd_conical(d->p, order));
    r.hypotheses.emplace_back("p primitive" + tag, primitive(d->p));
    r.hypotheses.emplace_back("|a| <= A" + tag, detail::len(d->a) <= A);
    r.hypotheses.emplace_back("|b| <= B" + tag, detail::len(d->b) <= B);
    r.hypotheses.emplace_back("|h| - (A+B) >= 3|p|" + tag,
                              detail::len(h) - (A + B) >= 3 * detail::len(d->p));
  }
  if (!all_true(r.hypotheses)) {
    r.settle();
    return r;
  }

  Word const sigma_h = normal_form(h, order);
  std::vector<seq::WordDecomposition> words;
  i = 1;
  for (auto const* d : {&d1, &d2}) {
    seq::WordDecomposition wd{
        detail::to_symbols(normal_form(d->a, order)),
        detail::to_symbols(normal_form(d->p, order)), d->n - 1,
        detail::to_symbols(normal_form(d->p * d->b, order))};
    r.conclusions.emplace_back(
        "sigma(h) = sigma(a) sigma(p)^(n-1) sigma(p b)[" + std::to_string(i++)
            + "]",
        wd.expand() == detail::to_symbols(sigma_h));
    words.push_back(std::move(wd));
  }
  Rational B2 = B + detail::len(d1.p.length() >= d2.p.length() ? d1.p : d2.p);
  auto m = seq::match_word_quasiroots(detail::to_symbols(sigma_h), words[0],
                                      words[1], A, B2);
  r.rotation = m.rotation;
  r.conclusions.emplace_back("word matching preconditions",
                             m.status != seq::MatchReport::Status::precondition_failed);
  r.conclusions.emplace_back("sigma(p1), sigma(p2) cyclically conjugate",
                             m.rotation_ok);
  r.conclusions.emplace_back("free-group a-identity", m.left_identity);
  r.conclusions.emplace_back("free-group b-identity", m.right_identity);
  r.conclusions.emplace_back(
      "a1 p1 a1^-1 = a2 p2 a2^-1",
      d1.a * d1.p * d1.a.inverse() == d2.a * d2.p * d2.a.inverse());
  r.conclusions.emplace_back(
      "b1^-1 p1 b1 = b2^-1 p2 b2",
      d1.b.inverse() * d1.p * d1.b == d2.b.inverse() * d2.p * d2.b);
  r.settle();
  return r;
}

inline Step2Report check_step2(Element const& h, PowerDecomposition const& d1,
                               PowerDecomposition const& d2, Rational const& A,
                               Rational const& B) {
  return check_step2(h, d1, d2, A, B, VertexOrder::of(h.graph()));
}

struct Step3Report : CheckReport {
  std::optional<PairOrder> order;
  std::optional<ConicalConjugateResult> conical1;
  std::optional<ConicalConjugateResult> conical2;
  std::optional<Step2Report> step2;
};

// General strongly non-split primitive roots: pass to SD-conical conjugates
// under a suitable order, apply the SD-conical case with
// A' = A + (|V|-1) r, B' = B + (|V|-1) r, and pull the identities back.
inline Step3Report check_step3(Element const& h, PowerDecomposition const& d1,
                               PowerDecomposition const& d2, Rational const& A,
                               Rational const& B, std::size_t cap = kDefaultCap) {
  Step3Report r;
  auto const& gr = h.graph();
  auto const V = static_cast<std::int64_t>(gr.size());
  auto primitive = [&](Element const& g) {
    return !g.is_identity() && is_primitive(g, cap);
  };
  int i = 1;
  r.hypotheses.emplace_back("graph connected", gr.is_connected());
  for (auto const* d : {&d1, &d2}) {
    std::string tag = "[" + std::to_string(i++) + "]";
    r.hypotheses.emplace_back("geodesic decomposition" + tag,
                              detail::geodesic_power(h, *d));
    r.hypotheses.emplace_back("n >= 1" + tag, d->n >= 1);
    r.hypotheses.emplace_back("g strongly non-split" + tag,
                              is_strongly_non_split(d->p));
    r.hypotheses.emplace_back("g primitive" + tag, primitive(d->p));
    r.hypotheses.emplace_back("|a| <= A" + tag, detail::len(d->a) <= A);
    r.hypotheses.emplace_back("|b| <= B" + tag, detail::len(d->b) <= B);
    r.hypotheses.emplace_back(
        "|h| - (A+B) >= (2|V|+1)|g|" + tag,
        detail::len(h) - (A + B) >= (2 * V + 1) * detail::len(d->p));
  }
  if (!all_true(r.hypotheses)) {
    r.settle();
    return r;
  }

  r.conclusions.emplace_back("g1 cyclically reduced", is_cyclically_reduced(d1.p));
  r.conclusions.emplace_back("g2 cyclically reduced", is_cyclically_reduced(d2.p));
  if (!all_true(r.conclusions)) {
    r.settle();
    return r;
  }
  r.order = choose_order_for_pair(d1.p, d2.p);
  r.conical1 = conical_conjugate(d1.p, r.order->v1);
  r.conical2 = conical_conjugate(d2.p, r.order->v2);

  std::vector<PowerDecomposition> conj;
  i = 1;
  for (auto const& [d, cc] : {std::pair{&d1, &*r.conical1}, std::pair{&d2, &*r.conical2}}) {
    std::string tag = "[" + std::to_string(i++) + "]";
    r.conclusions.emplace_back("k <= |V|-1" + tag,
                               static_cast<std::int64_t>(cc->k) <= V - 1);
    r.conclusions.emplace_back("p SD-conical" + tag,
                               is_sd_conical(cc->p, r.order->order));
    r.conclusions.emplace_back("p strongly non-split" + tag,
                               is_strongly_non_split(cc->p));
    r.conclusions.emplace_back("g = c p c^-1 = d^-1 p d" + tag,
                               cc->a * cc->p * cc->a.inverse() == d->p
                                   && cc->b.inverse() * cc->p * cc->b == d->p);
    conj.push_back({d->a * cc->a, cc->p, d->n - cc->k, cc->b * d->b});
  }
  Rational rr = detail::len(d1.p.length() >= d2.p.length() ? d1.p : d2.p);
  Rational A2 = A + (V - 1) * rr;
  Rational B2 = B + (V - 1) * rr;
  r.step2 = check_step2(h, conj[0], conj[1], A2, B2, r.order->order, cap);
  r.conclusions.emplace_back("SD-conical case applies",
                             r.step2->status != CheckReport::Status::hypothesis_failed);
  r.conclusions.emplace_back("SD-conical case holds",
                             r.step2->status == CheckReport::Status::ok);
  r.conclusions.emplace_back(
      "a1 g1 a1^-1 = a2 g2 a2^-1",
      d1.a * d1.p * d1.a.inverse() == d2.a * d2.p * d2.a.inverse());
  r.conclusions.emplace_back(
      "b1^-1 g1 b1 = b2^-1 g2 b2",
      d1.b.inverse() * d1.p * d1.b == d2.b.inverse() * d2.p * d2.b);
  r.settle();
  return r;
}

inline PowerDecomposition as_power(QuasiRootDecomposition const& d) {
  return {d.a, d.g, d.n, d.b};
}

struct InstanceLimits {
  std::size_t max_vertices = 6;
  std::size_t max_root_length = 6;
  std::size_t max_affix = 6;
  std::size_t retries = 10'000;
};

struct Instance {
  GraphPtr graph;
  QuasiRootParams params;
  Element h;
  QuasiRootDecomposition planted;
};

namespace detail {

// Deterministic across standard libraries, unlike std::uniform_int_distribution.
inline std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline GraphPtr random_connected_graph(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i + 1));
  }
  for (Vertex j = 1; j < n; ++j) {
    edges.emplace_back(static_cast<Vertex>(draw(rng, 0, j - 1)), j);
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      bool present = std::any_of(edges.begin(), edges.end(), [&](auto e) {
        return (e.first == i && e.second == j) || (e.first == j && e.second == i);
      });
      if (!present && draw(rng, 0, 2) == 0) {
        edges.emplace_back(i, j);
      }
    }
  }
  return std::make_shared<DefiningGraph const>(std::move(names), edges);
}

inline Word random_reduced_word(std::mt19937_64& rng, DefiningGraph const& g,
                                std::size_t length) {
  Word w;
  while (w.size() < length) {
    Letter x{static_cast<Vertex>(draw(rng, 0, g.size() - 1)), draw(rng, 0, 1) == 1};
    append_reduced(g, w, x);
  }
  return w;
}

}  // namespace detail

// A seeded random instance with a planted quasi-root decomposition whose
// root is cyclically reduced, strongly non-split and primitive, and whose
// parameters meet the uniqueness theorem's bound with n = N.
inline Instance generate_instance(std::uint64_t seed,
                                  InstanceLimits const& limits = {}) {
  std::mt19937_64 rng(seed);
  static Rational const lambdas[] = {Rational(0), Rational(1, 4), Rational(2, 5)};
  for (std::size_t attempt = 0; attempt < limits.retries; ++attempt) {
    std::size_t nv = detail::draw(rng, 2, std::max<std::size_t>(2, limits.max_vertices));
    GraphPtr gp = detail::random_connected_graph(rng, nv);
    std::size_t glen = detail::draw(rng, 1, limits.max_root_length);
    Element g = Element::from_word(gp, detail::random_reduced_word(rng, *gp, glen));
    if (!is_cyclically_reduced(g) || !is_strongly_non_split(g) || !is_primitive(g)) {
      continue;
    }
    Rational lambda = lambdas[detail::draw(rng, 0, 2)];
    std::size_t N = theorem_min_power(nv, lambda);
    QuasiRootParams params(lambda, N);
    Element gn = power(g, N);
    std::size_t room = std::min(limits.max_affix, params.affix_bound(gn.length()));
    for (std::size_t inner = 0; inner < 100; ++inner) {
      Element a = Element::from_word(
          gp, detail::random_reduced_word(rng, *gp, detail::draw(rng, 0, room)));
      Element b = Element::from_word(
          gp, detail::random_reduced_word(rng, *gp, detail::draw(rng, 0, room)));
      Element h = a * gn * b;
      if (verify_quasi_root(params, h, a, g, N, b).ok()) {
        return {gp, params, h, {h, a, g, N, b}};
      }
    }
  }
  throw SamplingExhausted("no instance found for seed " + std::to_string(seed));
}

}  // namespace raag

#endif  // RAAG_QUASIROOT_HPP_
