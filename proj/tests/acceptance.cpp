// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// its budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "raag/harness.hpp"

using namespace raag;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool cond, std::string const& what) {
    ++checks_;
    if (!cond) {
      ++failures_;
      if (first_.empty()) {
        first_ = what;
      }
    }
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  Outcome outcome(std::string const& summary) const {
    std::ostringstream s;
    s << summary << ", " << checks_ << " checks";
    if (failures_ > 0) {
      s << ", " << failures_ << " failed, first: " << first_;
    }
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

// Root-count violations found anywhere in the run.
std::size_t g_root_checks = 0;
std::size_t g_root_violations = 0;

void note_roots(Element const& m, std::size_t n) {
  ++g_root_checks;
  if (extract_nth_roots(m, n).size() > 1) {
    ++g_root_violations;
  }
}

GraphPtr const p5 = path_graph(5);

Element e5(char const* t) { return Element::parse(p5, t); }

Outcome p5_fixtures() {
  Tally t;
  auto nat = VertexOrder::natural(5);
  Element g1 = e5("v2 v3 v5^-2"), g2 = e5("v2 v3"), g3 = e5("v2 v3 v4");
  t.expect(!is_non_split(g1), "g1 split");
  t.expect(is_non_split(g2) && !is_strongly_non_split(g2), "g2 non-split, not strongly");
  t.expect(is_strongly_non_split(g3), "g3 strongly non-split");
  t.expect(disjointly_commute(e5("v5"), g2), "v5 disjointly commutes with g2");
  Element g = e5("v2 v4^-1 v3^-1 v5");
  t.expect(to_string(*p5, normal_form(g, nat)) == "v4^-1 v5 v2 v3^-1", "sigma(g)");
  t.expect(starting_generators(g).to_vector() == std::vector<Vertex>{1, 3}, "S(g)");
  t.expect(!is_conical(g), "g not conical");
  t.expect(is_normal_word(p5, parse_word(*p5, "v4^-1 v5 v2 v3^-1"), nat), "w3 normal");
  t.expect(!is_normal_word(p5, parse_word(*p5, "v4^-1 v2 v5 v3^-1"), nat), "w2 not normal");
  t.expect(!is_normal_word(p5, parse_word(*p5, "v2 v4^-1 v3^-1 v5"), nat), "w1 not normal");
  Element c1 = e5("v2 v3^-1 v4^-1 v5");
  t.expect(is_conical(c1) && apex(c1) == 1, "g1 conical at v2");
  t.expect(is_pyramidal(c1, nat) && is_sd_conical(c1, nat), "v2v3^-1v4^-1v5 pyramidal, SD");
  t.expect(is_pyramidal(e5("v4 v5"), nat) && !is_sd_conical(e5("v4 v5"), nat),
           "v4v5 pyramidal, not SD");
  t.expect(!is_pyramidal(e5("v2 v1 v3 v4"), nat) && is_sd_conical(e5("v2 v1 v3 v4"), nat),
           "v2v1v3v4 SD, not pyramidal");
  auto cc = conical_conjugate(e5("v4^-1 v5 v2 v3^-1"), 1);
  t.expect(cc.p == c1 && cc.k == 1 && cc.a == e5("v4^-1 v5") && cc.b == e5("v2 v3^-1"),
           "conical conjugate of sigma(g)");
  t.expect(reduce(*p5, parse_word(*p5, "v1 v1 v2 v2^-1")) == parse_word(*p5, "v1 v1"),
           "w1 reduces to w2");
  t.expect(!are_conjugate(e5("v2^3 v3^3 v5"), e5("v2^3 v3^3")), "non-conjugate quasi-roots");
  return t.outcome("P5 fixtures");
}

// Five equivalent characterizations of cyclically reduced elements.
Outcome cyclic_reduction_criteria() {
  Tally t;
  std::size_t elements = 0;
  std::size_t reduced = 0;
  for (auto const& gp : {path_graph(3), path_graph(4)}) {
    auto all = oracle::all_elements(*gp, 4);
    std::vector<Element> conjugators;
    for (auto const& w : all) {
      conjugators.push_back(Element::from_word(gp, w));
    }
    for (auto const& w : all) {
      Element g = Element::from_word(gp, w);
      ++elements;
      std::size_t min_len = g.length();
      for (auto const& u : conjugators) {
        min_len = std::min(min_len, (u.inverse() * g * u).length());
      }
      bool c1 = min_len == g.length();
      bool c2 = !detail::strip_one(g).has_value();
      bool c3 = power(g, 2).length() == 2 * g.length();
      bool c4 = power(g, 3).length() == 3 * g.length();
      bool c5 = true;
      for (std::size_t d = 0; d <= g.length(); ++d) {
        for (auto const& p : enumerate_geodesic_prefixes(g, d)) {
          Element s = p.inverse() * g;
          c5 &= (s * p).length() == g.length();
        }
      }
      t.expect(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5,
               "conditions disagree on " + g.str());
      t.expect(c3 == is_cyclically_reduced(g), "predicate disagrees on " + g.str());
      reduced += c1;
    }
  }
  t.expect(reduced > 0 && reduced < elements, "both cases occur");
  return t.outcome(std::to_string(elements) + " elements of P3, P4, " + std::to_string(reduced) +
                   " cyclically reduced");
}

Outcome conical_conjugates() {
  Tally t;
  gen::Rng rng(1001);
  std::size_t samples = 0;
  while (samples < 1000) {
    auto gp = gen::connected_graph(rng, 2 + gen::below(rng, 5));
    auto g = gen::element_where(rng, gp, 6, [](Element const& e) {
      return is_non_split(e) && is_cyclically_reduced(e);
    });
    if (!g) {
      continue;
    }
    ++samples;
    auto supp = g->support().to_vector();
    Vertex v0 = supp[gen::below(rng, supp.size())];
    auto r = conical_conjugate(*g, v0);
    std::size_t n = gp->size();
    std::string tag = g->str();
    t.expect(r.a * r.p * r.a.inverse() == *g, "g = a p a^-1 for " + tag);
    t.expect(r.b.inverse() * r.p * r.b == *g, "g = b^-1 p b for " + tag);
    t.expect(power(*g, r.k) == r.a * r.b && is_geodesic({r.a, r.b}), "g^k = a b for " + tag);
    t.expect(r.k <= n - 1, "k <= |V|-1 for " + tag);
    t.expect(r.p.length() == g->length(), "|p| = |g| for " + tag);
    t.expect(is_conical(r.p) && apex(r.p) == v0, "p v0-conical for " + tag);
    Element pn = power(r.p, n - r.k);
    t.expect(power(*g, n) == r.a * pn * r.b && is_geodesic({r.a, pn, r.b}),
             "g^n = a p^(n-k) b geodesic for " + tag);
    note_roots(power(*g, 2), 2);
  }
  return t.outcome("1000 samples");
}

Outcome quasi_root_normal_forms() {
  Tally t;
  gen::Rng rng(2002);
  std::size_t samples = 0;
  while (samples < 1000) {
    auto inst = gen::sd_conical_product(rng);
    if (!inst) {
      continue;
    }
    ++samples;
    auto const& o = inst->order;
    Word expect = normal_form(inst->a, o);
    for (std::size_t i = 1; i < inst->n; ++i) {
      expect = concat(expect, normal_form(inst->g, o));
    }
    expect = concat(expect, normal_form(inst->g * inst->b, o));
    Element h = inst->a * power(inst->g, inst->n) * inst->b;
    t.expect(normal_form(h, o) == expect, "sigma(a g^n b) for g = " + inst->g.str());
  }
  return t.outcome("1000 samples");
}

Outcome fine_wilf() {
  Tally t;
  std::size_t merges = 0;
  for (std::size_t len = 2; len <= 12; ++len) {
    for (auto const& w : oracle::sequences(3, len)) {
      for (std::size_t p = 1; p < len; ++p) {
        for (std::size_t q = 1; p + q <= len; ++q) {
          bool consistent = oracle::periodic(w, p) && oracle::periodic(w, q);
          if (consistent) {
            ++merges;
            std::size_t d = seq::merge_periods(p, q, w);
            t.expect(d == std::gcd(p, q) && oracle::periodic(w, d), "merge_periods value");
          } else if (len == p + q) {
            ++merges;
            bool threw = false;
            try {
              seq::merge_periods(p, q, w);
            } catch (seq::InconsistentPeriods const&) {
              threw = true;
            }
            t.expect(threw, "inconsistent window accepted");
          }
        }
      }
    }
  }

  std::size_t matches = 0;
  for (std::size_t len = 1; len <= 14; ++len) {
    for (auto const& w : oracle::sequences(2, len)) {
      std::vector<seq::WordDecomposition> decs;
      for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t p = 1; i + 2 * p <= len; ++p) {
          seq::SymbolWord root(w.begin() + static_cast<std::ptrdiff_t>(i),
                               w.begin() + static_cast<std::ptrdiff_t>(i + p));
          if (!seq::seq_is_primitive(root)) {
            continue;
          }
          for (std::size_t m = 2; i + m * p <= len; ++m) {
            if (!oracle::periodic(seq::SymbolWord(w.begin() + static_cast<std::ptrdiff_t>(i),
                                                  w.begin() + static_cast<std::ptrdiff_t>(i + m * p)),
                                  p)) {
              break;
            }
            decs.push_back({seq::SymbolWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)),
                            root, m,
                            seq::SymbolWord(w.begin() + static_cast<std::ptrdiff_t>(i + m * p), w.end())});
          }
        }
      }
      for (auto const& d1 : decs) {
        for (auto const& d2 : decs) {
          Rational A(static_cast<std::int64_t>(std::max(d1.prefix.size(), d2.prefix.size())));
          Rational B(static_cast<std::int64_t>(std::max(d1.suffix.size(), d2.suffix.size())));
          auto r = seq::match_word_quasiroots(w, d1, d2, A, B);
          if (r.status == seq::MatchReport::Status::precondition_failed) {
            continue;
          }
          ++matches;
          t.expect(r.ok(), "match failed on " + seq::to_string(w));
        }
      }
    }
  }
  return t.outcome(std::to_string(merges) + " merges, " + std::to_string(matches) +
                   " matched pairs");
}

Outcome uniqueness_harness() {
  Tally t;
  std::size_t qualifying = 0;
  std::size_t checks = 0;
  std::size_t distinct = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto in = generate_instance(seed);
    auto r = run_instance(in, seed);
    qualifying += r.qualifying;
    checks += r.uniqueness_checks;
    t.expect(r.sound, "unsound search, seed " + std::to_string(seed));
    t.expect(r.planted_found, "planted root missing, seed " + std::to_string(seed));
    t.expect(r.violations.empty(), "seed " + std::to_string(seed) + ": " +
                                       (r.violations.empty() ? "" : r.violations.front()));
    g_root_checks += r.decompositions;
    if (!r.roots_unique) {
      ++g_root_violations;
    }
    auto found = find_quasi_roots(in.params, in.h);
    std::set<Element> roots;
    for (auto const& d : found) {
      roots.insert(d.g);
    }
    distinct += roots.size() > 1;
  }
  return t.outcome("500 instances, " + std::to_string(qualifying) + " qualifying roots, " +
                   std::to_string(checks) + " uniqueness checks, " + std::to_string(distinct) +
                   " instances with several roots");
}

Outcome witnesses() {
  Tally t;
  {
    Element h = e5("(v2^3 v3^3 v5)^5");
    QuasiRootParams params(Rational(1, 7), 2);
    auto found = find_quasi_roots(params, h);
    Element r1 = e5("v2^3 v3^3 v5"), r2 = e5("v2^3 v3^3");
    bool has1 = false, has2 = false;
    for (auto const& d : found) {
      has1 |= d.g == r1 && d.n == 5 && d.a.is_identity() && d.b.is_identity();
      has2 |= d.g == r2 && d.n == 5 && d.a == e5("v5^5") && d.b.is_identity();
      t.expect(verify_quasi_root(params, d).ok(), "unsound witness decomposition");
    }
    t.expect(has1, "root v2^3 v3^3 v5 missing");
    t.expect(has2, "root v2^3 v3^3 missing");
    t.expect(!are_conjugate(r1, r2), "P5 roots conjugate");
  }
  {
    auto edge = make_graph("vertices: v1 v2\nedges: v1-v2\n");
    Element h = Element::parse(edge, "v1^5 v2^5");
    QuasiRootParams params(Rational(1, 2), 2, true);
    auto found = find_quasi_roots(params, h);
    Element v1 = Element::parse(edge, "v1"), v2 = Element::parse(edge, "v2");
    bool has1 = false, has2 = false;
    for (auto const& d : found) {
      has1 |= d.g == v1 && d.n == 5 && d.a.is_identity() && d.b == Element::parse(edge, "v2^5");
      has2 |= d.g == v2 && d.n == 5 && d.a == Element::parse(edge, "v1^5") && d.b.is_identity();
    }
    t.expect(has1 && has2, "v1 and v2 roots missing");
    t.expect(!are_conjugate(v1, v2), "v1 conjugate to v2");
  }
  return t.outcome("two witnesses");
}

Outcome root_uniqueness() {
  // Exhaustive sweep on top of the roots counted by earlier criteria.
  for (auto const& gp : {path_graph(4), make_graph("vertices: a b c d\nedges: a-b b-c c-a c-d\n")}) {
    for (auto const& w : oracle::all_elements(*gp, 4)) {
      Element g = Element::from_word(gp, w);
      for (std::size_t n = 2; n <= 4; ++n) {
        note_roots(power(g, n), n);
      }
    }
  }
  std::ostringstream s;
  s << g_root_checks << " root extractions, " << g_root_violations << " with several roots";
  return {g_root_violations == 0, s.str()};
}

struct Criterion {
  int id;
  char const* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "P5 example fixtures", 1, p5_fixtures},
      {2, "cyclically reduced equivalences", 120, cyclic_reduction_criteria},
      {3, "conical conjugates", 60, conical_conjugates},
      {4, "normal form of quasi-root products", 60, quasi_root_normal_forms},
      {5, "Fine-Wilf suite", 120, fine_wilf},
      {6, "quasi-root uniqueness harness", 600, uniqueness_harness},
      {7, "non-uniqueness witnesses", 30, witnesses},
      {8, "root uniqueness", 60, root_uniqueness},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.budget_seconds;
    bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s [%d] %s: %s (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", over time");
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria passed\n", failed == 0 ? "PASS" : "FAIL",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
