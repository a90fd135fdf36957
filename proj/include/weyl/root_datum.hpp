#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

using IVec = std::vector<long long>;

// Square integer matrix, row-major.
struct IMat {
  int n = 0;
  std::vector<long long> a;

  IMat() = default;
  explicit IMat(int n_) : n(n_), a(size_t(n_) * n_, 0) {}
  static IMat identity(int n_) {
    IMat m(n_);
    for (int i = 0; i < n_; ++i) m.at(i, i) = 1;
    return m;
  }
  long long& at(int i, int j) { return a[size_t(i) * n + j]; }
  long long at(int i, int j) const { return a[size_t(i) * n + j]; }

  IVec apply(const IVec& v) const;
  RatVec apply(const RatVec& v) const;
  // v as a row vector: returns v * M (used for the contragredient action on roots).
  IVec apply_transpose(const IVec& v) const;
  IMat mul(const IMat& o) const;
  friend bool operator==(const IMat& x, const IMat& y) {
    return x.n == y.n && x.a == y.a;
  }
};

// Class in the finite abelian group Omega = Lambda / Q^vee, stored as residues
// with respect to the Smith invariant factors of the Cartan matrix.
struct OmegaElem {
  IVec res;
  friend bool operator==(const OmegaElem& a, const OmegaElem& b) {
    return a.res == b.res;
  }
  friend bool operator<(const OmegaElem& a, const OmegaElem& b) {
    return a.res < b.res;
  }
};

struct DynkinComponent {
  char type = 'A';
  int rank = 0;
  int offset = 0;       // 0-based index of the first simple root of this component
  int affine_node = 0;  // node id of the affine reflection s_{theta,1}
  IVec theta;           // highest root, simple-root coordinates (full length)
  IVec theta_coroot;    // theta^vee in fundamental-coweight coordinates (full length)
};

// Exact integer model of a finite reduced root system of type A/B/C/D (or a
// direct sum of such), with the full coweight lattice Lambda (adjoint
// convention) and Omega = Lambda/Q^vee.
//
// Coordinate conventions used throughout the project:
//   - roots are integer vectors in simple-root coordinates,
//   - coweights are integer vectors in fundamental-coweight coordinates,
//   - the pairing <alpha, lambda> is then the plain dot product,
//   - the simple coroot alpha_j^vee has coweight coordinates equal to the
//     j-th column of the Cartan matrix.
//
// Affine node ids: finite nodes are 1..r; the affine node of component 0 is 0,
// of component c >= 1 it is r + c.  For irreducible data this is S~ = {0..r}.
class RootDatum {
 public:
  static RootDatum build(char type, int rank);
  static RootDatum build(const std::vector<std::pair<char, int>>& components);

  int rank() const { return rank_; }
  int num_components() const { return int(components_.size()); }
  bool irreducible() const { return components_.size() == 1; }
  const DynkinComponent& component(int c) const { return components_[c]; }
  const IMat& cartan() const { return cartan_; }

  const std::vector<IVec>& positive_roots() const { return pos_roots_; }
  // Coordinates of the coroot of positive_roots()[i] in the simple-coroot basis.
  const std::vector<IVec>& positive_coroots() const { return pos_coroots_; }
  // The same coroot expressed in fundamental-coweight coordinates.
  const IVec& coroot_in_lambda(int pos_root_index) const {
    return pos_coroots_lambda_[pos_root_index];
  }
  const IVec& two_rho() const { return two_rho_; }

  long long pairing(const IVec& root, const IVec& lam) const;
  Rat pairing(const IVec& root, const RatVec& v) const;

  // Lookup of a root among the stored positive roots: returns (index, sign),
  // sign = 0 if the vector is not a root.
  std::pair<int, int> classify_root(const IVec& root) const;

  OmegaElem omega_component(const IVec& lam) const;
  OmegaElem omega_identity() const;
  OmegaElem omega_add(const OmegaElem& a, const OmegaElem& b) const;
  OmegaElem omega_neg(const OmegaElem& a) const;
  bool omega_is_identity(const OmegaElem& a) const;
  long long omega_order() const;
  // Canonical index in 0..|Omega|-1 (mixed-radix over the invariant factors).
  long long omega_index(const OmegaElem& a) const;
  const IVec& omega_invariant_factors() const { return smith_diag_; }

  // Affine Dynkin diagram S~.
  std::vector<int> affine_node_ids() const;
  int num_affine_nodes() const { return rank_ + num_components(); }
  bool is_valid_node(int id) const;
  bool is_affine_node(int id) const;
  int component_of_node(int id) const;
  long long affine_cartan(int i, int j) const;
  bool nodes_adjacent(int i, int j) const;

  // Finite root data of a node: for i >= 1 the simple root alpha_i at level 0,
  // for an affine node the pair (-theta, 1).
  void node_root(int id, IVec& root, long long& level) const;

  RatVec base_alcove_barycenter() const;
  // Vertex of the closure of the base alcove opposite to the wall of type id.
  RatVec base_alcove_vertex(int id) const;

  std::string describe() const;

 private:
  int rank_ = 0;
  std::vector<DynkinComponent> components_;
  IMat cartan_;
  std::vector<IVec> pos_roots_;
  std::vector<IVec> pos_coroots_;
  std::vector<IVec> pos_coroots_lambda_;
  std::map<IVec, int> root_index_;
  IVec two_rho_;
  // Smith data for the Cartan matrix: U * A * V = diag(smith_diag_).
  IMat smith_u_;
  IVec smith_diag_;

  void compute_roots();
  void compute_smith();
};

}  // namespace weyl
