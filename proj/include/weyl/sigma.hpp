#pragma once

#include <set>
#include <vector>

#include "weyl/building.hpp"
#include "weyl/diagram_aut.hpp"

namespace weyl {

// A datum (root system, Frobenius diagram automorphism, dominant coweight mu,
// level set K = S~ minus one node) together with the derived length-0 element
// tau and the twisted Frobenius sigma_J = Int(tau) o sigma.
struct CoxeterDatum {
  const AffineWeyl* w = nullptr;
  DiagramAutomorphism sigma;
  IVec mu;
  int removed_node = 0;
  std::set<int> K;
  AffineElement tau;
  DiagramAutomorphism sigma_j;
  std::vector<int> tau_sigma_perm;  // node action of sigma_j

  const RootDatum& datum() const { return w->datum(); }

  static CoxeterDatum make(const AffineWeyl& w, const DiagramAutomorphism& sigma,
                           const IVec& mu, int removed_node);
};

// Member of the index set of Ekedahl-Oort strata: an admissible, K-minimal,
// sigma-Coxeter element with its sigma-support and neighbor set Sigma_w.
struct EOElement {
  AffineElement w;
  std::set<int> sigma_supp;
  std::set<int> sigma_w;

  friend bool operator==(const EOElement& a, const EOElement& b) {
    return a.w == b.w;
  }
};

// A stratum of the fine (Bruhat-Tits) decomposition: an EO element together
// with a minimal-length rational representative of a coset modulo the
// rational parabolic of type S~ minus Sigma_w.
struct BTStratumLabel {
  EOElement eo;
  AffineElement coset_rep;
};

struct SeparatorResult {
  AffineElement j;     // rational separator
  AffineElement val1;  // delta_K(j a, first stratum), minimal double-coset rep
  AffineElement val2;
  bool support_certificate = false;  // removed node in supp(w0P d(g,g') w0P')
};

struct BtCheckReport {
  std::vector<BTStratumLabel> labels;
  size_t pairs_tested = 0;
  size_t pairs_separated = 0;
  std::vector<std::pair<size_t, size_t>> failures;  // label index pairs
  bool all_separated() const { return failures.empty(); }
};

class SigmaOps {
 public:
  explicit SigmaOps(const CoxeterDatum& cd) : cd_(&cd), b_(*cd.w) {}

  const CoxeterDatum& cd() const { return *cd_; }
  const Building& building() const { return b_; }

  AffineElement basic_tau() const { return cd_->tau; }
  std::vector<int> tau_sigma_orbit(int node) const;
  std::set<int> sigma_support(const AffineElement& x) const;
  bool is_sigma_coxeter(const AffineElement& x) const;
  std::vector<EOElement> enumerate_eo() const;
  std::set<int> sigma_w_set(const AffineElement& x,
                            const std::set<int>& supp) const;
  std::vector<AffineElement> rational_elements(int radius) const;
  bool is_rational(const AffineElement& x) const;
  bool is_sigma_straight(const AffineElement& x) const;
  AffineElement verify_constancy(const EOElement& e,
                                 const AffineElement& j) const;
  SeparatorResult find_separator(const EOElement& e1, const EOElement& e2,
                                 const AffineElement& jprime,
                                 int search_radius) const;
  BtCheckReport bt_vs_j_check(int radius, int search_radius) const;

 private:
  const CoxeterDatum* cd_;
  Building b_;
  mutable std::vector<AffineElement> rat_cache_;
  mutable int rat_cache_radius_ = -1;
};

}  // namespace weyl
