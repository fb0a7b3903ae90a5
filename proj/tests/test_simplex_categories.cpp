#include <doctest.h>

#include <set>
#include <vector>

#include "szmap/simplex_categories.hpp"

using namespace szmap;

namespace {

long long g_hom_size_formula(int n, int p, int q) {
  long long size = 1;
  for (int k = p + 1; k <= q; ++k) size *= n - k + 1;
  return size;
}

// All injective sequences by a plain double loop, used as an order oracle.
std::vector<std::vector<int>> brute_sequences(int p, int q, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = p + 1; v < q; ++v) {
      bool used = false;
      for (int e : cur) used = used || e == v;
      if (used) continue;
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace

TEST_CASE("positions of a generator order and print correctly") {
  CHECK(to_string(GPosetPosition(5, 1, 1)) == "d_1^3 d_0 g_1");
  CHECK(to_string(GPosetPosition(3, 3, 0)) == "g_3");
  CHECK(to_string(GPosetPosition(2, 1, 0)) == "d_1 g_1");
  CHECK(to_string(GPosetPosition(2, 1, 1)) == "d_0 g_1");
  CHECK(poset_leq(GPosetPosition(3, 1, 0), GPosetPosition(3, 1, 2)));
  CHECK(!poset_leq(GPosetPosition(3, 1, 2), GPosetPosition(3, 1, 0)));
  CHECK_THROWS_AS(GPosetPosition(3, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(GPosetPosition(3, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(poset_leq(GPosetPosition(3, 1, 0), GPosetPosition(3, 2, 0)),
                  std::invalid_argument);
}

TEST_CASE("subset morphisms validate, compare and print") {
  const SubsetMorphism U(3, {0, 2, 3});
  CHECK(U.p == 0);
  CHECK(U.q == 3);
  CHECK(to_string(U) == "{0,2,3}");
  CHECK(U.contains(2));
  CHECK(!U.contains(1));
  CHECK_THROWS_AS(SubsetMorphism(3, {0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(SubsetMorphism(3, {0, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(SubsetMorphism(3, {}), std::invalid_argument);

  const SubsetMorphism full(3, {0, 1, 2, 3});
  const SubsetMorphism ends(3, {0, 3});
  CHECK(poset_leq(full, U));
  CHECK(poset_leq(U, ends));
  CHECK(!poset_leq(ends, full));
  const SubsetMorphism other(3, {0, 1, 3});
  CHECK(!poset_leq(U, other));
  CHECK(!poset_leq(other, U));
}

TEST_CASE("hom elements of the loop-group side") {
  const GHomElement x(2, 0, 2, {0, 0});
  CHECK(to_string(x) == "(g_2, d_1 g_1)");
  CHECK(to_string(GHomElement(2, 0, 2, {0, 1})) == "(g_2, d_0 g_1)");
  CHECK(to_string(GHomElement::identity(2, 1)) == "id_1");
  CHECK(x.position(1) == 0);
  CHECK(x.component(2) == GPosetPosition(2, 2, 0));
  CHECK(poset_leq(x, GHomElement(2, 0, 2, {0, 1})));
  CHECK(!poset_leq(GHomElement(2, 0, 2, {0, 1}), x));
  CHECK_THROWS_AS(GHomElement(2, 0, 2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(GHomElement(2, 0, 2, {0, 2}), std::invalid_argument);
}

TEST_CASE("composition on the subset side takes unions") {
  CHECK(compose_c(SubsetMorphism(2, {0, 1}), SubsetMorphism(2, {1, 2})) ==
        SubsetMorphism(2, {0, 1, 2}));
  const SubsetMorphism U(4, {0, 1, 2});
  CHECK(compose_c(U, SubsetMorphism(4, {2})) == U);
  CHECK(compose_c(SubsetMorphism(5, {0, 2}), SubsetMorphism(5, {2, 4})) ==
        SubsetMorphism(5, {0, 2, 4}));
  CHECK_THROWS_AS(compose_c(SubsetMorphism(4, {0, 1}), SubsetMorphism(4, {2, 3})),
                  std::invalid_argument);
}

TEST_CASE("composition on the loop-group side concatenates") {
  const GHomElement f(2, 0, 1, {0});   // (d_1 g_1)
  const GHomElement g(2, 1, 2, {0});   // (g_2)
  CHECK(compose_g(f, g) == GHomElement(2, 0, 2, {0, 0}));
  CHECK(to_string(compose_g(f, g)) == "(g_2, d_1 g_1)");

  CHECK(compose_g(GHomElement::identity(2, 0), f) == f);
  CHECK(compose_g(f, GHomElement::identity(2, 1)) == f);

  const GHomElement low(5, 0, 2, {0, 1});    // (d_1^3 g_2, d_1^3 d_0 g_1)
  const GHomElement high(5, 2, 4, {0, 1});   // (d_1 g_4, d_1 d_0 g_3)
  const GHomElement both = compose_g(low, high);
  CHECK(to_string(both) == "(d_1 g_4, d_1 d_0 g_3, d_1^3 g_2, d_1^3 d_0 g_1)");

  CHECK_THROWS_AS(compose_g(g, f), std::invalid_argument);
}

TEST_CASE("sequence chains unfold prefixes of the sequence") {
  const auto c = seq_to_chain(SequenceIndex(0, 3, {2, 1}), 3);
  REQUIRE(c.length() == 2);
  CHECK(c.entries[0] == SubsetMorphism(3, {0, 1, 2, 3}));
  CHECK(c.entries[1] == SubsetMorphism(3, {0, 2, 3}));
  CHECK(c.entries[2] == SubsetMorphism(3, {0, 3}));
  CHECK(to_string(c, true) == "{0,3} >= {0,2,3} >= {0,1,2,3}");
  CHECK(to_string(c) == "{0,1,2,3} <= {0,2,3} <= {0,3}");

  const auto single = seq_to_chain(SequenceIndex(1, 4, {}), 5);
  CHECK(single.length() == 0);
  CHECK(single.entries[0] == SubsetMorphism(5, {1, 4}));

  const auto other = seq_to_chain(SequenceIndex(0, 3, {1, 2}), 3);
  CHECK(other.entries[0] == SubsetMorphism(3, {0, 1, 2, 3}));
  CHECK(other.entries[1] == SubsetMorphism(3, {0, 1, 3}));
  CHECK(other.entries[2] == SubsetMorphism(3, {0, 3}));
}

TEST_CASE("sequence enumeration is lexicographic with falling-factorial counts") {
  const auto two = enumerate_sequences(0, 3, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].entries == std::vector<int>{1, 2});
  CHECK(two[1].entries == std::vector<int>{2, 1});

  const auto empty_only = enumerate_sequences(0, 1, 0);
  REQUIRE(empty_only.size() == 1);
  CHECK(empty_only[0].entries.empty());

  const auto six = enumerate_sequences(0, 4, 2);
  CHECK(six.size() == 6);  // falling factorial 3 * 2
  const auto oracle = brute_sequences(0, 4, 2);
  REQUIRE(six.size() == oracle.size());
  for (size_t i = 0; i < six.size(); ++i) CHECK(six[i].entries == oracle[i]);

  CHECK(enumerate_sequences(0, 3, 5).empty());
  CHECK(enumerate_sequences(0, 3, -1).empty());

  CHECK_THROWS_AS(SequenceIndex(0, 3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SequenceIndex(0, 3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(SequenceIndex(2, 2, {}), std::invalid_argument);
}

TEST_CASE("chain faces and degeneracies") {
  const auto c = seq_to_chain(SequenceIndex(0, 3, {2, 1}), 3);
  const auto f0 = chain_face(0, c);
  REQUIRE(f0.length() == 1);
  CHECK(f0.entries[0] == SubsetMorphism(3, {0, 2, 3}));
  CHECK(f0.entries[1] == SubsetMorphism(3, {0, 3}));

  const auto single = seq_to_chain(SequenceIndex(0, 3, {}), 3);
  CHECK_THROWS_AS(chain_degeneracy(1, single), std::invalid_argument);
  const auto doubled = chain_degeneracy(0, single);
  CHECK(doubled.length() == 1);
  CHECK(doubled.entries[0] == doubled.entries[1]);
  CHECK(!doubled.nondegenerate());

  CHECK_THROWS_AS(chain_face(3, c), std::invalid_argument);
  CHECK_THROWS_AS(chain_face(0, single), std::invalid_argument);
}

TEST_CASE("nerve enumeration with a brute-force oracle for the worked hom") {
  const auto elements = enumerate_c_hom(3, 0, 3);
  REQUIRE(elements.size() == 4);
  CHECK(to_string(elements[0]) == "{0,1,2,3}");
  CHECK(to_string(elements[3]) == "{0,3}");

  // strict pairs by brute force
  int strict_pairs = 0;
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!(a == b) && poset_leq(a, b)) ++strict_pairs;
  CHECK(strict_pairs == 5);

  const auto chains = enumerate_nerve_c(3, 0, 3, 1, true);
  CHECK(static_cast<int>(chains.size()) == strict_pairs);

  const auto level0 = enumerate_nerve_c(3, 0, 3, 0, false);
  REQUIRE(level0.size() == elements.size());
  for (size_t i = 0; i < level0.size(); ++i) CHECK(level0[i].entries[0] == elements[i]);

  const auto gelems = enumerate_g_hom(2, 0, 2);
  REQUIRE(gelems.size() == 2);
  CHECK(to_string(gelems[0]) == "(g_2, d_1 g_1)");
  CHECK(to_string(gelems[1]) == "(g_2, d_0 g_1)");
}

TEST_CASE("hom cardinalities match the closed forms up to n = 7") {
  for (int n = 0; n <= 7; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int q = p; q <= n; ++q) {
        const long long c_size = static_cast<long long>(enumerate_c_hom(n, p, q).size());
        const long long g_size = static_cast<long long>(enumerate_g_hom(n, p, q).size());
        const long long c_expected = q == p ? 1 : (1LL << (q - p - 1));
        CHECK(c_size == c_expected);
        CHECK(g_size == g_hom_size_formula(n, p, q));
      }
    }
  }
}

TEST_CASE("composition is associative, unital and monotone up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int r = p; r <= n; ++r) {
        for (int q = r; q <= n; ++q) {
          const auto here = enumerate_c_hom(n, p, r);
          const auto there = enumerate_c_hom(n, r, q);
          for (const auto& U : here) {
            CHECK(compose_c(SubsetMorphism(n, {p}), U) == U);
            CHECK(compose_c(U, SubsetMorphism(n, {r})) == U);
          }
          for (const auto& f : enumerate_g_hom(n, p, r)) {
            CHECK(compose_g(GHomElement::identity(n, p), f) == f);
            CHECK(compose_g(f, GHomElement::identity(n, r)) == f);
          }
          for (const auto& U : here) {
            for (const auto& V : there) {
              const auto UV = compose_c(U, V);
              CHECK(UV.p == p);
              CHECK(UV.q == q);
              // monotone in both arguments
              for (const auto& U2 : here)
                if (poset_leq(U, U2)) CHECK(poset_leq(UV, compose_c(U2, V)));
              for (const auto& V2 : there)
                if (poset_leq(V, V2)) CHECK(poset_leq(UV, compose_c(U, V2)));
            }
          }
          const auto gh = enumerate_g_hom(n, p, r);
          const auto gt = enumerate_g_hom(n, r, q);
          for (const auto& f : gh)
            for (const auto& g : gt) {
              const auto fg = compose_g(f, g);
              for (const auto& f2 : gh)
                if (poset_leq(f, f2)) CHECK(poset_leq(fg, compose_g(f2, g)));
              for (const auto& g2 : gt)
                if (poset_leq(g, g2)) CHECK(poset_leq(fg, compose_g(f, g2)));
            }
          // associativity over triples
          for (int s = q; s <= n; ++s) {
            const auto beyond = enumerate_c_hom(n, q, s);
            for (const auto& U : here)
              for (const auto& V : there)
                for (const auto& W : beyond)
                  CHECK(compose_c(compose_c(U, V), W) == compose_c(U, compose_c(V, W)));
            const auto gbeyond = enumerate_g_hom(n, q, s);
            for (const auto& f : gh)
              for (const auto& g : gt)
                for (const auto& h : gbeyond)
                  CHECK(compose_g(compose_g(f, g), h) == compose_g(f, compose_g(g, h)));
          }
        }
      }
    }
  }
}

TEST_CASE("simplicial identities hold for chain faces and degeneracies") {
  const auto chains = enumerate_nerve_c(3, 0, 3, 2, false);
  for (const auto& c : chains) {
    const int l = c.length();
    for (int j = 0; j <= l; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(chain_face(i, chain_face(j, c)) == chain_face(j - 1, chain_face(i, c)));
    for (int j = 0; j <= l; ++j)
      for (int i = 0; i <= j; ++i)
        CHECK(chain_degeneracy(i, chain_degeneracy(j, c)) ==
              chain_degeneracy(j + 1, chain_degeneracy(i, c)));
    for (int j = 0; j <= l; ++j) {
      CHECK(chain_face(j, chain_degeneracy(j, c)) == c);
      CHECK(chain_face(j + 1, chain_degeneracy(j, c)) == c);
    }
    for (int j = 0; j <= l; ++j)
      for (int i = j + 2; i <= l + 1; ++i)
        CHECK(chain_face(i, chain_degeneracy(j, c)) ==
              chain_degeneracy(j, chain_face(i - 1, c)));
    for (int j = 0; j <= l; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(chain_face(i, chain_degeneracy(j, c)) ==
              chain_degeneracy(j - 1, chain_face(i, c)));
  }
}

TEST_CASE("every nondegenerate chain is a face-iterate of a maximal sequence chain") {
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q <= n; ++q) {
        const int d = q - p - 1;
        auto key = [](const std::vector<SubsetMorphism>& entries) {
          std::vector<std::vector<int>> out;
          for (const auto& U : entries) out.push_back(U.members);
          return out;
        };
        // collect the iterated faces of all maximal chains
        std::set<std::vector<std::vector<int>>> reachable;
        for (const auto& sigma : enumerate_sequences(p, q, d)) {
          const auto maximal = seq_to_chain(sigma, n);
          // all subchains keeping at least one entry
          const int entries = maximal.length() + 1;
          for (unsigned keep = 1; keep < (1u << entries); ++keep) {
            std::vector<SubsetMorphism> sub;
            for (int j = 0; j < entries; ++j)
              if (keep & (1u << j)) sub.push_back(maximal.entries[static_cast<size_t>(j)]);
            reachable.insert(key(sub));
          }
        }
        for (int len = 0; len <= d; ++len)
          for (const auto& c : enumerate_nerve_c(n, p, q, len, true))
            CHECK(reachable.count(key(c.entries)) == 1);
      }
    }
  }
}

TEST_CASE("make_chain rejects non-monotone entry lists") {
  CHECK_THROWS_AS(
      make_chain(std::vector<SubsetMorphism>{SubsetMorphism(3, {0, 3}),
                                             SubsetMorphism(3, {0, 1, 3})}),
      std::invalid_argument);
  CHECK_THROWS_AS(make_chain(std::vector<SubsetMorphism>{}), std::invalid_argument);
}
