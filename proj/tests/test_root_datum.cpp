#include "doctest.h"

#include <set>

#include "weyl/root_datum.hpp"

using namespace weyl;

namespace {
int expected_pos_roots(char t, int r) {
  switch (t) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
  }
  return -1;
}
}  // namespace

TEST_CASE("positive root counts match closed formulas") {
  struct Case { char t; int r; };
  for (Case c : {Case{'A', 1}, Case{'A', 2}, Case{'A', 8}, Case{'B', 2},
                 Case{'B', 6}, Case{'C', 3}, Case{'D', 4}, Case{'D', 5}}) {
    RootDatum d = RootDatum::build(c.t, c.r);
    CHECK(int(d.positive_roots().size()) == expected_pos_roots(c.t, c.r));
  }
}

TEST_CASE("roots come paired with coroots, <alpha, alpha^vee> = 2") {
  for (char t : {'A', 'B', 'C', 'D'}) {
    int r = (t == 'A') ? 4 : (t == 'D' ? 4 : 3);
    RootDatum d = RootDatum::build(t, r);
    for (size_t i = 0; i < d.positive_roots().size(); ++i) {
      CHECK(d.pairing(d.positive_roots()[i], d.coroot_in_lambda(int(i))) == 2);
    }
  }
}

TEST_CASE("simple reflection permutes the other positive roots") {
  RootDatum d = RootDatum::build('B', 3);
  // s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i on root coordinates
  for (int i = 1; i <= d.rank(); ++i) {
    int kept = 0;
    for (const auto& alpha : d.positive_roots()) {
      IVec img = alpha;
      long long c = 0;
      for (int k = 0; k < d.rank(); ++k) c += d.cartan().at(k, i - 1) * alpha[k];
      img[i - 1] -= c;
      auto [idx, sign] = d.classify_root(img);
      CHECK(sign != 0);
      if (sign > 0) ++kept;
    }
    CHECK(kept == int(d.positive_roots().size()) - 1);
  }
}

TEST_CASE("fundamental group orders") {
  CHECK(RootDatum::build('A', 1).omega_order() == 2);
  CHECK(RootDatum::build('A', 8).omega_order() == 9);
  CHECK(RootDatum::build('B', 6).omega_order() == 2);
  CHECK(RootDatum::build('C', 3).omega_order() == 2);
  CHECK(RootDatum::build('D', 4).omega_order() == 4);
  CHECK(RootDatum::build('D', 5).omega_order() == 4);
}

TEST_CASE("Omega is a group and coroots map to the identity class") {
  RootDatum d = RootDatum::build('A', 3);
  for (size_t i = 0; i < d.positive_roots().size(); ++i)
    CHECK(d.omega_is_identity(d.omega_component(d.coroot_in_lambda(int(i)))));
  IVec w1{1, 0, 0};
  OmegaElem a = d.omega_component(w1);
  CHECK(!d.omega_is_identity(a));
  OmegaElem s = a;
  int order = 1;
  while (!d.omega_is_identity(s)) {
    s = d.omega_add(s, a);
    ++order;
    REQUIRE(order <= 8);
  }
  CHECK(order == 4);
  CHECK(d.omega_is_identity(d.omega_add(a, d.omega_neg(a))));
}

TEST_CASE("omega_index is a bijection onto 0..|Omega|-1") {
  for (char t : {'A', 'D'}) {
    RootDatum d = RootDatum::build(t, 4);
    std::set<long long> seen;
    // enumerate small coweight box, classes must cover all indices
    int r = d.rank();
    std::vector<long long> v(r, 0);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int e = 0; e < 3; ++e) {
            IVec lam{a, b, c, e};
            long long idx = d.omega_index(d.omega_component(lam));
            CHECK(idx >= 0);
            CHECK(idx < d.omega_order());
            seen.insert(idx);
          }
    CHECK((long long)seen.size() == d.omega_order());
  }
}

TEST_CASE("affine Dynkin adjacency") {
  RootDatum a2 = RootDatum::build('A', 2);
  CHECK(a2.num_affine_nodes() == 3);
  CHECK(a2.nodes_adjacent(0, 1));
  CHECK(a2.nodes_adjacent(0, 2));
  CHECK(a2.nodes_adjacent(1, 2));

  RootDatum b3 = RootDatum::build('B', 3);
  CHECK(b3.nodes_adjacent(0, 2));
  CHECK(!b3.nodes_adjacent(0, 1));
  CHECK(!b3.nodes_adjacent(0, 3));

  RootDatum a1 = RootDatum::build('A', 1);
  CHECK(a1.nodes_adjacent(0, 1));
  CHECK(a1.affine_cartan(0, 1) == -2);
}

TEST_CASE("theta is the highest root") {
  for (char t : {'A', 'B', 'C', 'D'}) {
    int r = (t == 'A') ? 3 : 4;
    RootDatum d = RootDatum::build(t, r);
    const IVec& th = d.component(0).theta;
    auto [idx, sign] = d.classify_root(th);
    CHECK(sign == 1);
    long long hth = 0;
    for (auto c : th) hth += c;
    for (const auto& alpha : d.positive_roots()) {
      long long h = 0;
      for (auto c : alpha) h += c;
      CHECK(h <= hth);
    }
    CHECK(d.pairing(th, d.component(0).theta_coroot) == 2);
  }
}

TEST_CASE("base alcove barycenter and vertices lie on the right side of the walls") {
  for (char t : {'A', 'B'}) {
    RootDatum d = RootDatum::build(t, t == 'A' ? 2 : 3);
    RatVec b = d.base_alcove_barycenter();
    // 0 < <alpha, b> for all alpha > 0 and <theta, b> < 1
    for (const auto& alpha : d.positive_roots()) {
      Rat p = d.pairing(alpha, b);
      CHECK(p > Rat(0));
      CHECK(p < Rat(1));
    }
    for (int id : d.affine_node_ids()) {
      RatVec v = d.base_alcove_vertex(id);
      for (int other : d.affine_node_ids()) {
        IVec root;
        long long level;
        d.node_root(other, root, level);
        // wall functional: <root, x> + level, zero on the wall of type `other`
        Rat val = d.pairing(root, v) + Rat(level);
        if (other == id)
          CHECK(val > Rat(0));
        else
          CHECK(val == Rat(0));
      }
    }
  }
}

TEST_CASE("reducible direct sum") {
  RootDatum d = RootDatum::build({{'A', 1}, {'A', 2}});
  CHECK(d.rank() == 3);
  CHECK(d.num_components() == 2);
  CHECK(d.num_affine_nodes() == 5);
  CHECK(int(d.positive_roots().size()) == 1 + 3);
  CHECK(d.omega_order() == 6);
  CHECK(d.component(1).offset == 1);
  // affine node of the second component is 4 and is adjacent to nodes 2, 3
  CHECK(d.is_affine_node(4));
  CHECK(d.nodes_adjacent(4, 2));
  CHECK(d.nodes_adjacent(4, 3));
  CHECK(!d.nodes_adjacent(4, 1));
  CHECK(!d.nodes_adjacent(0, 2));
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS(RootDatum::build('E', 6));
  CHECK_THROWS(RootDatum::build('A', 0));
  CHECK_THROWS(RootDatum::build('B', 1));
  CHECK_THROWS(RootDatum::build('D', 2));
}
