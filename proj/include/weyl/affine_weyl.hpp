#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "weyl/root_datum.hpp"

namespace weyl {

// Element of the finite Weyl group W0, stored as its matrix on
// fundamental-coweight coordinates together with the inverse matrix.
class FiniteWeyl {
 public:
  FiniteWeyl() = default;
  static FiniteWeyl identity(const RootDatum& d);
  static FiniteWeyl simple(const RootDatum& d, int i);  // i in 1..r

  const IMat& mat() const { return m_; }
  const IMat& inv_mat() const { return minv_; }

  IVec apply(const IVec& cowt) const { return m_.apply(cowt); }
  RatVec apply(const RatVec& v) const { return m_.apply(v); }
  // Action on roots (simple-root coordinates).
  IVec apply_root(const IVec& root) const { return minv_.apply_transpose(root); }
  IVec apply_root_inverse(const IVec& root) const {
    return m_.apply_transpose(root);
  }

  FiniteWeyl mul(const FiniteWeyl& o) const;
  FiniteWeyl inverse() const;
  bool is_identity() const;
  int length(const RootDatum& d) const;  // #positive roots sent negative
  std::vector<int> word(const RootDatum& d) const;  // lex-min reduced word

  friend bool operator==(const FiniteWeyl& a, const FiniteWeyl& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const FiniteWeyl& a, const FiniteWeyl& b) {
    return !(a == b);
  }

  static FiniteWeyl from_matrix(IMat m, IMat minv) {
    FiniteWeyl w;
    w.m_ = std::move(m);
    w.minv_ = std::move(minv);
    return w;
  }

 private:
  IMat m_, minv_;
};

struct Word {
  std::vector<int> nodes;  // affine node ids
  bool known_reduced = false;
};

// Element eps^lam * fin of the extended affine Weyl group W~ = Lambda x| W0.
class AffineElement {
 public:
  AffineElement() = default;
  AffineElement(const RootDatum* d, IVec lam, FiniteWeyl fin)
      : d_(d), lam_(std::move(lam)), fin_(std::move(fin)) {}

  static AffineElement identity(const RootDatum& d);
  static AffineElement translation(const RootDatum& d, const IVec& lam);
  static AffineElement simple_reflection(const RootDatum& d, int node);

  const RootDatum& datum() const { return *d_; }
  const RootDatum* datum_ptr() const { return d_; }
  const IVec& lam() const { return lam_; }
  const FiniteWeyl& fin() const { return fin_; }

  AffineElement mul(const AffineElement& o) const;
  AffineElement mul_simple(int node) const;         // x * s_node
  AffineElement mul_simple_left(int node) const;    // s_node * x
  AffineElement inverse() const;
  bool is_identity() const;

  // Affine action on the apartment.
  RatVec apply(const RatVec& v) const;
  IVec apply(const IVec& v) const;

  int length() const;
  OmegaElem omega_part() const;
  bool in_wa() const;

  bool has_right_descent(int node) const;  // l(x s) < l(x)
  bool has_left_descent(int node) const;   // l(s x) < l(x)

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.lam_ == b.lam_ && a.fin_ == b.fin_;
  }
  friend bool operator!=(const AffineElement& a, const AffineElement& b) {
    return !(a == b);
  }

  size_t hash() const;
  std::string str() const;

 private:
  const RootDatum* d_ = nullptr;
  IVec lam_;
  FiniteWeyl fin_;
};

struct AffineElementHash {
  size_t operator()(const AffineElement& x) const { return x.hash(); }
};

// The W~ machinery that needs datum-level caches (Omega representatives).
class AffineWeyl {
 public:
  explicit AffineWeyl(const RootDatum& d);

  const RootDatum& datum() const { return *d_; }

  // The length-0 representative of an Omega class.
  const AffineElement& omega_rep(const OmegaElem& cls) const;
  // Conjugation action of a length-0 element on the affine nodes:
  // tau s_i tau^{-1} = s_{perm[i]}.
  std::vector<int> omega_node_action(const AffineElement& tau) const;

  // x = (product of word) * omega_rep(second).  Greedy smallest-left-descent,
  // hence the lexicographically smallest reduced word.
  std::pair<Word, OmegaElem> reduced_word(const AffineElement& x) const;
  AffineElement from_word(const Word& w, const OmegaElem& cls) const;
  std::set<int> support(const AffineElement& x) const;

  bool bruhat_leq(const AffineElement& x, const AffineElement& y) const;

  std::vector<AffineElement> admissible_set(const IVec& mu) const;

  enum class Side { Left, Right, Double };
  AffineElement min_coset_rep(const AffineElement& x, const std::set<int>& K,
                              Side side, const std::set<int>& K2 = {}) const;

  bool subexpression_check(const std::vector<int>& chain,
                           const AffineElement& w) const;

  // All elements of W_a with length <= radius, canonically sorted
  // (length, then reduced word lexicographically).
  std::vector<AffineElement> enumerate_wa(int radius) const;
  // The finite standard parabolic W_P (throws if it exceeds the cap).
  std::vector<AffineElement> enumerate_parabolic(const std::set<int>& P,
                                                 size_t cap = 2000000) const;
  AffineElement longest_element(const std::set<int>& P) const;

  // W0-orbit of a coweight.
  std::vector<IVec> finite_orbit(const IVec& lam) const;
  IVec dominant_representative(const IVec& lam) const;
  RatVec dominant_representative(const RatVec& v) const;

  // All reduced words of the W_a-part (for oracles / exhaustive checks).
  std::vector<std::vector<int>> all_reduced_words(const AffineElement& x) const;

  // Canonical sort key used everywhere results are emitted.
  std::pair<int, std::vector<int>> sort_key(const AffineElement& x) const;
  void canonical_sort(std::vector<AffineElement>& v) const;

 private:
  const RootDatum* d_;
  std::vector<AffineElement> omega_reps_;  // indexed by omega_index
  mutable std::map<std::pair<IVec, IVec>, bool> bruhat_cache_;

  void build_omega_reps();
  bool bruhat_leq_wa(const AffineElement& x, const AffineElement& y) const;
};

}  // namespace weyl
