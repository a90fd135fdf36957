#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "weyl/sigma.hpp"

using namespace weyl;

namespace {

// sigma permutation of the built-in split unitary datum on n = rank+1 nodes:
// fixes 0 and reverses the rest.
std::vector<int> unitary_sigma(int rank) {
  int n = rank + 1;
  std::vector<int> p(size_t(n), 0);
  for (int i = 1; i < n; ++i) p[size_t(i)] = n - i;
  return p;
}

CoxeterDatum unitary_datum(const AffineWeyl& w) {
  const RootDatum& d = w.datum();
  IVec mu(size_t(d.rank()), 0);
  mu[0] = 1;
  return CoxeterDatum::make(
      w, DiagramAutomorphism::from_node_perm(d, unitary_sigma(d.rank())), mu, 0);
}

}  // namespace

TEST_CASE("diagram automorphisms from node permutations") {
  RootDatum d = RootDatum::build('A', 2);
  CHECK(DiagramAutomorphism::from_node_perm(d, {0, 1, 2}) ==
        DiagramAutomorphism::identity(d));

  DiagramAutomorphism rot = DiagramAutomorphism::from_node_perm(d, {1, 2, 0});
  CHECK(rot.order() == 3);
  CHECK(rot.inverse().compose(rot).is_identity());
  for (int t : d.affine_node_ids())
    CHECK(rot.apply(AffineElement::simple_reflection(d, t)) ==
          AffineElement::simple_reflection(d, rot.perm(t)));

  CHECK_THROWS(DiagramAutomorphism::from_node_perm(d, {0, 0, 1}));
  CHECK_THROWS(DiagramAutomorphism::from_node_perm(d, {0, 1}));

  // a 4-cycle diagram admits the rotation but not a single transposition
  RootDatum d3 = RootDatum::build('A', 3);
  CHECK(DiagramAutomorphism::from_node_perm(d3, {1, 2, 3, 0}).order() == 4);
  CHECK_THROWS(DiagramAutomorphism::from_node_perm(d3, {1, 0, 2, 3}));

  // conjugation respects products: g(xy) = g(x) g(y)
  AffineWeyl w(d);
  for (const AffineElement& x : w.enumerate_wa(2))
    for (const AffineElement& y : w.enumerate_wa(2))
      CHECK(rot.apply(x.mul(y)) == rot.apply(x).mul(rot.apply(y)));
}

TEST_CASE("length-zero elements act as diagram automorphisms") {
  RootDatum d = RootDatum::build('A', 3);
  AffineWeyl w(d);
  for (long long k = 0; k < d.omega_order(); ++k) {
    OmegaElem cls = d.omega_identity();
    // walk to the class of index k through repeated addition of omega(mu=e1)
    IVec e1(size_t(d.rank()), 0);
    e1[0] = 1;
    for (long long i = 0; i < k; ++i)
      cls = d.omega_add(cls, d.omega_component(e1));
    AffineElement tau = w.omega_rep(cls);
    DiagramAutomorphism g = DiagramAutomorphism::from_length_zero(d, tau);
    CHECK(g.node_perm() == w.omega_node_action(tau));
    for (const AffineElement& x : w.enumerate_wa(2))
      CHECK(g.apply(x) == tau.mul(x).mul(tau.inverse()));
  }
}

TEST_CASE("the twisted datum of the split unitary example") {
  RootDatum d = RootDatum::build('A', 8);  // nine affine nodes
  AffineWeyl w(d);
  CoxeterDatum cd = unitary_datum(w);
  CHECK(cd.tau.length() == 0);
  CHECK_FALSE(d.omega_is_identity(cd.tau.omega_part()));

  // tau rotates the cycle one step; composed with the flip i -> -i the
  // twisted action is i -> 1 - i (mod 9)
  std::vector<int> tau_perm = w.omega_node_action(cd.tau);
  for (int i = 0; i < 9; ++i) CHECK(tau_perm[size_t(i)] == (i + 1) % 9);
  for (int i = 0; i < 9; ++i)
    CHECK(cd.tau_sigma_perm[size_t(i)] == ((1 - i) % 9 + 9) % 9);

  SigmaOps ops(cd);
  auto orbit0 = ops.tau_sigma_orbit(0);
  CHECK(std::set<int>(orbit0.begin(), orbit0.end()) == std::set<int>{0, 1});
  auto orbit2 = ops.tau_sigma_orbit(2);
  CHECK(std::set<int>(orbit2.begin(), orbit2.end()) == std::set<int>{2, 8});
  auto orbit5 = ops.tau_sigma_orbit(5);
  CHECK(std::set<int>(orbit5.begin(), orbit5.end()) == std::set<int>{5});

  // support closure under the twisted action
  AffineElement x = w.from_word(Word{{0, 8}, false}, cd.tau.omega_part());
  CHECK(ops.sigma_support(x) == std::set<int>{0, 1, 2, 8});
  CHECK(ops.is_sigma_coxeter(x));
  // two letters of s0 s1 tau fall in the single orbit {0,1}
  AffineElement y = w.from_word(Word{{0, 1}, false}, cd.tau.omega_part());
  CHECK_FALSE(ops.is_sigma_coxeter(y));
}

TEST_CASE("twisted Coxeter enumeration matches a direct filter") {
  for (int rank : {3, 4}) {
    RootDatum d = RootDatum::build('A', rank);
    AffineWeyl w(d);
    CoxeterDatum cd = unitary_datum(w);
    SigmaOps ops(cd);
    std::vector<EOElement> eo = ops.enumerate_eo();

    std::vector<AffineElement> expect;
    for (const AffineElement& x : w.admissible_set(cd.mu)) {
      bool kmin = std::none_of(cd.K.begin(), cd.K.end(), [&](int t) {
        return x.has_left_descent(t);
      });
      std::set<int> supp = ops.sigma_support(x);
      if (kmin && int(supp.size()) < d.num_affine_nodes() &&
          ops.is_sigma_coxeter(x))
        expect.push_back(x);
    }
    REQUIRE(eo.size() == expect.size());
    for (size_t i = 0; i < eo.size(); ++i) {
      CHECK(eo[i].w == expect[i]);
      CHECK(eo[i].sigma_supp == ops.sigma_support(eo[i].w));
      // a proper support never touches every node
      CHECK(int(eo[i].sigma_supp.size()) < d.num_affine_nodes());
      if (eo[i].w.length() == 0) {
        CHECK(eo[i].sigma_supp.empty());
        // the boundary set of the empty stratum is the orbit of the
        // removed node
        auto orbit = ops.tau_sigma_orbit(cd.removed_node);
        CHECK(eo[i].sigma_w ==
              std::set<int>(orbit.begin(), orbit.end()));
      } else {
        // otherwise: the outside neighbors of the support
        std::set<int> expect_sw;
        for (int t : d.affine_node_ids()) {
          if (eo[i].sigma_supp.count(t)) continue;
          for (int s : eo[i].sigma_supp)
            if (d.nodes_adjacent(t, s)) expect_sw.insert(t);
        }
        CHECK(eo[i].sigma_w == expect_sw);
      }
    }
  }
}

TEST_CASE("rational elements of an inner twist are everything") {
  // odd orthogonal datum where tau and sigma both swap nodes 0 and 1
  RootDatum d = RootDatum::build('B', 2);
  AffineWeyl w(d);
  IVec mu{1, 0};
  std::vector<int> flip{1, 0, 2};
  CoxeterDatum cd = CoxeterDatum::make(
      w, DiagramAutomorphism::from_node_perm(d, flip), mu, 2);
  CHECK(cd.sigma_j.is_identity());
  SigmaOps ops(cd);
  CHECK(ops.rational_elements(3).size() == w.enumerate_wa(3).size());
  for (const AffineElement& x : w.enumerate_wa(2)) CHECK(ops.is_rational(x));
  CHECK_FALSE(ops.is_rational(cd.tau));  // not in W_a
}

TEST_CASE("straightness against iterated lengths") {
  RootDatum d = RootDatum::build('A', 2);
  AffineWeyl w(d);
  IVec mu{1, 1};
  CoxeterDatum cd =
      CoxeterDatum::make(w, DiagramAutomorphism::identity(d), mu, 0);
  SigmaOps ops(cd);

  AffineElement tr = AffineElement::translation(d, IVec{1, 1});
  CHECK(ops.is_sigma_straight(tr));
  AffineElement s1 = AffineElement::identity(d).mul_simple(1);
  CHECK_FALSE(ops.is_sigma_straight(s1));

  // with the trivial twist straightness is l(x^k) = k l(x) for all k
  for (const AffineElement& x : w.enumerate_wa(3)) {
    bool brute = true;
    AffineElement p = x;
    for (int k = 2; k <= 6; ++k) {
      p = p.mul(x);
      if (p.length() != k * x.length()) brute = false;
    }
    CHECK(ops.is_sigma_straight(x) == brute);
  }
}

TEST_CASE("the residue value map is constant and separators exist") {
  RootDatum d = RootDatum::build('A', 3);
  AffineWeyl w(d);
  CoxeterDatum cd = unitary_datum(w);
  SigmaOps ops(cd);
  std::vector<EOElement> eo = ops.enumerate_eo();
  REQUIRE(eo.size() >= 2);

  for (const EOElement& e : eo)
    for (const AffineElement& j : ops.rational_elements(4)) {
      AffineElement val = ops.verify_constancy(e, j);
      // the value refines the stratum: gate distance times the longest
      // element of the support parabolic
      CHECK(val.length() >= w.longest_element(e.sigma_supp).length());
    }

  AffineElement id = AffineElement::identity(d);
  SeparatorResult sep = ops.find_separator(eo[0], eo[1], id, 8);
  CHECK(ops.is_rational(sep.j));
  CHECK_FALSE(sep.val1 == sep.val2);

  // the same stratum with a translate inside the outside parabolic is not
  // a valid pair
  CHECK_THROWS(ops.find_separator(eo[0], eo[0], id, 8));
  // a non-rational translate is rejected
  AffineElement s2 = id.mul_simple(2);
  if (!ops.is_rational(s2)) CHECK_THROWS(ops.find_separator(eo[0], eo[1], s2, 8));
}

TEST_CASE("stratum labels are pairwise separated at small radius") {
  RootDatum d = RootDatum::build('A', 3);
  AffineWeyl w(d);
  CoxeterDatum cd = unitary_datum(w);
  SigmaOps ops(cd);
  BtCheckReport rep = ops.bt_vs_j_check(2, 8);
  CHECK(rep.pairs_tested > 0);
  CHECK(rep.all_separated());
  CHECK(rep.pairs_separated == rep.pairs_tested);
}
