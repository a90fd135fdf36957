#pragma once

#include <set>
#include <vector>

#include "weyl/affine_weyl.hpp"
#include "weyl/diagram_aut.hpp"

namespace weyl {

// An alcove of the standard apartment, identified with the element of W_a
// carrying the base alcove onto it.
struct Alcove {
  AffineElement elem;

  Alcove() = default;
  explicit Alcove(AffineElement e);

  friend bool operator==(const Alcove& a, const Alcove& b) {
    return a.elem == b.elem;
  }
  friend bool operator!=(const Alcove& a, const Alcove& b) { return !(a == b); }
};

struct AlcoveHash {
  size_t operator()(const Alcove& a) const { return a.elem.hash(); }
};

// H_{alpha,k}, normalized so alpha is a stored positive root.
struct Hyperplane {
  int root_index = 0;
  long long level = 0;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.root_index == b.root_index && a.level == b.level;
  }
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    return std::tie(a.root_index, a.level) < std::tie(b.root_index, b.level);
  }
};

// The P-residue of its base alcove: all alcoves y with delta(base, y) in W_P.
struct Residue {
  Alcove base;
  std::set<int> type;
};

struct Gallery {
  std::vector<Alcove> alcoves;
};

struct DoubleProjectionResult {
  AffineElement w1;  // min(W_P delta(base, base2) W_{P2})
  Residue r1;        // projection of the second residue onto the first
  Residue r1p;       // projection of the first residue onto the second
};

struct DrEnumResult {
  std::vector<Alcove> alcoves;  // descent walls contained in H, length <= radius
  size_t count_at_radius = 0;
  size_t count_at_radius_minus_2 = 0;
  bool stabilized = false;
};

// Alcove geometry of one apartment: Weyl distances, residues and gates,
// double projections, direction sets of galleries, acute cones, wall-distance
// tests and the descent-wall enumeration.
class Building {
 public:
  explicit Building(const AffineWeyl& w) : w_(&w), d_(&w.datum()) {}

  const AffineWeyl& weyl() const { return *w_; }
  const RootDatum& datum() const { return *d_; }
  Alcove base() const { return Alcove(AffineElement::identity(*d_)); }

  AffineElement delta(const Alcove& x, const Alcove& y) const;
  AffineElement delta_k(const Alcove& x, const Alcove& y,
                        const std::set<int>& K) const;

  Hyperplane normalize_wall(const IVec& root, long long level) const;
  // The wall of x of type t (the image under x of the base-alcove wall t).
  Hyperplane wall(const Alcove& x, int t) const;
  // Walls of x separating it from the base alcove; types = right descents.
  std::set<Hyperplane> descent_walls(const Alcove& x) const;

  Residue residue(const Alcove& base, const std::set<int>& P) const;
  bool residue_member(const Residue& r, const Alcove& y) const;
  bool residues_equal(const Residue& r, const Residue& r2) const;
  std::vector<Alcove> residue_alcoves(const Residue& r,
                                      size_t cap = 2000000) const;

  Alcove gate(const Alcove& b, const Residue& r) const;
  DoubleProjectionResult double_projection(const Residue& r,
                                           const Residue& r2) const;
  // The gate of an alcove of the second residue under projection to the first.
  Alcove project(const Alcove& x, const Residue& r) const;

  // One minimal gallery from b to x (prefixes of the canonical reduced word).
  Gallery minimal_gallery(const Alcove& b, const Alcove& x) const;
  bool is_gallery(const Gallery& g) const;
  bool is_minimal(const Gallery& g) const;

  // All w in W0 such that every crossing of the gallery enters the
  // w-positive half-space of the crossed wall.
  std::vector<FiniteWeyl> gallery_direction(const Gallery& g) const;
  bool goes_in_direction(const Gallery& g, const FiniteWeyl& w) const;
  // x in the acute cone C(b, w)?
  bool acute_cone_member(const Alcove& b, const FiniteWeyl& w,
                         const Alcove& x) const;

  // K must be the complement of a single node v; tests whether the barycenter
  // of x keeps distance >= margin from every hyperplane through the base
  // vertex of type v (in pairing units, exact arithmetic).
  bool far_from_walls(const Alcove& x, const std::set<int>& K,
                      long long margin) const;

  // W_K(wu)W_K != W_K(wu2)W_K; requires uW_K != u2W_K.
  bool separates_cosets(const AffineElement& w, const AffineElement& u,
                        const AffineElement& u2, const std::set<int>& K) const;

  DrEnumResult enumerate_dr_subset(const std::set<Hyperplane>& H,
                                   int radius) const;

  // Extends a minimal gallery whose endpoint (and total Weyl distance) is
  // fixed by sigmaJ with a gallery to a sigmaJ-fixed alcove far from the
  // K-walls, keeping the concatenation minimal.  Searches translations of
  // increasing size and throws if none is found within max_box.
  Gallery extend_gallery(const Gallery& g, const DiagramAutomorphism& sigmaJ,
                         const std::set<int>& K, long long margin,
                         int max_box = 12) const;

  std::vector<FiniteWeyl> enumerate_w0() const;

 private:
  const AffineWeyl* w_;
  const RootDatum* d_;

  int removed_node_of(const std::set<int>& K) const;
};

}  // namespace weyl
