#pragma once

#include <vector>

#include "weyl/affine_weyl.hpp"

namespace weyl {

// Automorphism of the affine Dynkin diagram realized as an exact affine map
// v |-> L v + t on the apartment that permutes the walls of the base alcove
// according to the node permutation.  Acts on the extended affine Weyl group
// by conjugation (s_i |-> s_{perm(i)}).
class DiagramAutomorphism {
 public:
  DiagramAutomorphism() = default;

  static DiagramAutomorphism identity(const RootDatum& d);
  // Solves for the unique affine map from the wall permutation; throws if the
  // permutation does not preserve the affine Cartan matrix.
  static DiagramAutomorphism from_node_perm(const RootDatum& d,
                                            const std::vector<int>& perm);
  // Conjugation action of a length-0 element.
  static DiagramAutomorphism from_length_zero(const RootDatum& d,
                                              const AffineElement& tau);

  const std::vector<int>& node_perm() const { return perm_; }
  int perm(int node) const { return perm_[size_t(node)]; }
  const RootDatum& datum() const { return *d_; }

  // (*this) after o.
  DiagramAutomorphism compose(const DiagramAutomorphism& o) const;
  DiagramAutomorphism inverse() const;
  int order() const;
  bool is_identity() const;

  RatVec apply_point(const RatVec& v) const;
  AffineElement apply(const AffineElement& x) const;
  bool fixes(const AffineElement& x) const { return apply(x) == x; }

  friend bool operator==(const DiagramAutomorphism& a,
                         const DiagramAutomorphism& b) {
    return a.perm_ == b.perm_ && a.lin_ == b.lin_ && a.trans_ == b.trans_;
  }

 private:
  const RootDatum* d_ = nullptr;
  std::vector<int> perm_;
  RatMat lin_, lin_inv_;
  RatVec trans_;

  static DiagramAutomorphism make(const RootDatum& d, std::vector<int> perm,
                                  RatMat lin, RatVec trans);
};

}  // namespace weyl
