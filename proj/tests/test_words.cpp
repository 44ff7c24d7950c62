#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "raag/element.hpp"

using namespace raag;

namespace {

GraphPtr const p5 = path_graph(5);
GraphPtr const p4 = path_graph(4);

Word w5(char const* text) { return parse_word(*p5, text); }
Element e5(char const* text) { return Element::parse(p5, text); }

Word random_word(std::mt19937& rng, DefiningGraph const& g, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back({static_cast<Vertex>(rng() % g.size()), rng() % 2 == 1});
  }
  return w;
}

// A small graph that is neither a path nor complete.
GraphPtr const kite = make_graph("vertices: a b c d\nedges: a-b b-c c-a c-d\n");

}  // namespace

TEST_CASE("word parsing") {
  CHECK(to_string(*p5, w5("v2 v3^-1")) == "v2 v3^-1");
  CHECK(to_string(*p5, w5("v2^3")) == "v2 v2 v2");
  CHECK(to_string(*p5, w5("v2^-2")) == "v2^-1 v2^-1");
  CHECK(to_string(*p5, w5("(v1 v2^-1)^-2")) == "v2 v1^-1 v2 v1^-1");
  CHECK(to_string(*p5, w5("((v1)^2 v3)^2")) == "v1 v1 v3 v1 v1 v3");
  CHECK(w5("").empty());
  CHECK(w5("  ").empty());
  CHECK_THROWS_AS(w5("v2^0"), ParseError);
  CHECK_THROWS_AS(w5("v2^"), ParseError);
  CHECK_THROWS_AS(w5("(v2"), ParseError);
  CHECK_THROWS_AS(w5("v2)"), ParseError);
  CHECK_THROWS_AS(w5("v2 ^-1"), ParseError);
  CHECK_THROWS_AS(w5("v9"), UnknownVertex);
}

TEST_CASE("inverse word") {
  CHECK(inverse(w5("v2 v3^-1")) == w5("v3 v2^-1"));
  CHECK(inverse(Word{}).empty());
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    Word w = random_word(rng, *p5, rng() % 8);
    CHECK(reduce(*p5, concat(w, inverse(w))).empty());
  }
}

TEST_CASE("innermost cancellations") {
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(find_innermost_cancellation(*p5, w5("v2 v2^-1")) == P{0, 1});
  CHECK(find_innermost_cancellation(*p5, w5("v1 v3 v1^-1")) == P{0, 2});
  CHECK_FALSE(find_innermost_cancellation(*p5, w5("v2 v3 v2^-1")));
  CHECK_FALSE(find_innermost_cancellation(*p5, w5("v2 v2")));
}

TEST_CASE("reduction examples") {
  CHECK(reduce(*p5, w5("v1 v1 v2 v2^-1")) == w5("v1 v1"));
  CHECK(reduce(*p5, Word{}).empty());
  CHECK(reduce(*p5, w5("v1 v3 v1^-1 v4")) == w5("v3 v4"));
  CHECK(is_reduced(*p5, w5("v2 v3 v2^-1")));
  CHECK_FALSE(is_reduced(*p5, w5("v1 v3 v1^-1")));
}

TEST_CASE("reduction agrees with the commutation-class oracle") {
  std::mt19937 rng(7);
  for (auto const& g : {p4, kite}) {
    for (int t = 0; t < 300; ++t) {
      Word w = random_word(rng, *g, rng() % 9);
      Word r = reduce(*g, w);
      CHECK(is_reduced(*g, r));
      CHECK(oracle::canonical(*g, r) == oracle::canonical(*g, w));
      Word fast = multiply_reduced(*g, {}, w);
      CHECK(oracle::canonical(*g, fast) == oracle::canonical(*g, w));
      CHECK(fast.size() == r.size());
    }
  }
}

TEST_CASE("every cancellation order reaches the same element") {
  // Delete any available cancellation at each step, exhaustively.
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    Word w = random_word(rng, *p4, 6);
    std::set<Word> ends;
    std::vector<Word> todo{w};
    while (!todo.empty()) {
      Word x = todo.back();
      todo.pop_back();
      bool any = false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
          if (x[i].vertex != x[j].vertex || x[i].inverse == x[j].inverse) {
            continue;
          }
          bool clear = true;
          for (std::size_t k = i + 1; k < j; ++k) {
            clear &= p4->commutes(x[k].vertex, x[i].vertex);
          }
          if (clear) {
            any = true;
            Word y;
            for (std::size_t k = 0; k < x.size(); ++k) {
              if (k != i && k != j) {
                y.push_back(x[k]);
              }
            }
            todo.push_back(y);
          }
        }
      }
      if (!any) {
        ends.insert(oracle::canonical(*p4, x));
      }
    }
    CHECK(ends.size() == 1);
    CHECK(*ends.begin() == oracle::canonical(*p4, w));
  }
}

TEST_CASE("length and support") {
  CHECK(e5("v2 v3 v5^-2").support().to_vector() == std::vector<Vertex>{1, 2, 4});
  CHECK(Element(p5).support().empty());
  CHECK(Element(p5).length() == 0);
  Element g = e5("v1 v3 v1^-1");
  CHECK(g.support().to_vector() == std::vector<Vertex>{2});
  CHECK(g.length() == 1);
}

TEST_CASE("equality and disjoint commutation") {
  CHECK(e5("v2 v4^-1 v3^-1 v5") == e5("v4^-1 v5 v2 v3^-1"));
  CHECK_FALSE(e5("v2 v3") == e5("v3 v2"));
  CHECK(disjointly_commute(e5("v5"), e5("v2 v3")));
  CHECK_FALSE(disjointly_commute(e5("v4"), e5("v2 v3 v4")));
  CHECK_FALSE(disjointly_commute(e5("v4"), e5("v2 v3")));
  CHECK_THROWS_AS(e5("v1") == Element::parse(p4, "v1"), GraphMismatch);
}

TEST_CASE("group products agree with the oracle") {
  std::mt19937 rng(11);
  for (auto const& g : {p4, kite}) {
    for (int t = 0; t < 200; ++t) {
      Word u = random_word(rng, *g, rng() % 6);
      Word v = random_word(rng, *g, rng() % 6);
      Element x = Element::from_word(g, u) * Element::from_word(g, v);
      CHECK(oracle::canonical(*g, x.word()) == oracle::canonical(*g, oracle::cat(u, v)));
      CHECK(x.inverse() * x == Element(g));
      CHECK(equal_by_reduction(x, Element::from_word(g, oracle::cat(u, v))));
    }
  }
}

TEST_CASE("geodesic products") {
  CHECK(is_geodesic({e5("v1"), e5("v1")}));
  CHECK_FALSE(is_geodesic({e5("v2"), e5("v2^-1")}));
  Element a = e5("v5"), g = e5("v2 v3"), b = e5("v1");
  CHECK(is_geodesic({a, g, g, b}));
  CHECK(power(g, 2).length() == 4);
  CHECK(power(g, 0) == Element(p5));
  CHECK(power(e5("v2 v3 v2^-1"), 2).length() == 4);
}

TEST_CASE("geodesic prefixes") {
  Element g = e5("v1 v3");
  CHECK(enumerate_geodesic_prefixes(g, 0) == std::vector<Element>{Element(p5)});
  CHECK(enumerate_geodesic_prefixes(g, 2) == std::vector<Element>{g});
  auto one = enumerate_geodesic_prefixes(g, 1);
  CHECK(one.size() == 2);
  CHECK(enumerate_geodesic_prefixes(e5("v2 v3"), 1) == std::vector<Element>{e5("v2")});
  CHECK_THROWS_AS(enumerate_geodesic_prefixes(g, 3), PreconditionError);
  CHECK(left_quotient(e5("v3"), g) == e5("v1"));
  CHECK_FALSE(left_quotient(e5("v2"), g));
  CHECK(right_quotient(g, e5("v1")) == e5("v3"));
}

TEST_CASE("geodesic prefixes match the oracle exhaustively") {
  for (auto const& g : {p4, kite}) {
    for (auto const& w : oracle::all_elements(*g, 4)) {
      Element e = Element::from_word(g, w);
      for (std::size_t d = 0; d <= w.size(); ++d) {
        std::set<Word> got;
        for (auto const& p : enumerate_geodesic_prefixes(e, d)) {
          got.insert(oracle::canonical(*g, p.word()));
        }
        CHECK(got == oracle::prefixes(*g, w, d));
      }
      for (std::size_t d = 0; d <= w.size(); ++d) {
        for (auto const& s : enumerate_geodesic_suffixes(e, d)) {
          CHECK(right_quotient(e, s).has_value());
        }
      }
    }
  }
}

TEST_CASE("dependence DAG ideals and the cap") {
  auto dag = dependence_dag(e5("v1 v3 v5"));
  CHECK(dag.minimal().size() == 3);
  CHECK(dag.ideals_of_size(2, 100).size() == 3);
  CHECK_THROWS_AS(dag.ideals_of_size(2, 2), CapExceeded);
  auto chain = dependence_dag(e5("v1 v2 v3"));
  CHECK(chain.edges().size() == 2);
  CHECK(chain.upward_closure(1) == std::vector<bool>{false, true, true});
}

TEST_CASE("shortlex order is total on elements") {
  auto all = oracle::all_elements(*p4, 3);
  std::vector<Element> es;
  for (auto const& w : all) {
    es.push_back(Element::from_word(p4, w));
  }
  std::sort(es.begin(), es.end());
  CHECK(std::adjacent_find(es.begin(), es.end()) == es.end());
  for (std::size_t i = 1; i < es.size(); ++i) {
    CHECK(es[i - 1].length() <= es[i].length());
  }
}
