#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weyl {

// F_{p^m} with elements 0..p^m-1 encoding polynomials in the generator
// (base-p digits = coefficients), reduced modulo the lexicographically least
// irreducible monic polynomial of degree m.
class FiniteField {
 public:
  FiniteField(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  // modulus coefficients c_0..c_m (monic, c_m = 1)
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[size_t(a) * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[size_t(b)]); }
  int neg(int a) const { return neg_[size_t(a)]; }
  int mul(int a, int b) const { return mul_[size_t(a) * q_ + b]; }
  int inv(int a) const;
  int frob(int a) const { return frob_[size_t(a)]; }  // a^p
  bool in_prime_field(int a) const { return a < p_; }
  // base-p digits c_0..c_{m-1} of an element
  std::vector<int> digits(int a) const;

 private:
  int p_, m_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_, frob_;
};

// Full flag in F^n: bases[i] is the (i+1) x n reduced-echelon basis matrix of
// the (i+1)-dimensional step.  Canonical: flag equality = field-wise equality.
struct Flag {
  int n = 0;
  const FiniteField* f = nullptr;
  std::vector<std::vector<std::vector<int>>> bases;  // steps 1..n-1

  friend bool operator==(const Flag& a, const Flag& b) {
    return a.n == b.n && a.bases == b.bases;
  }
  friend bool operator<(const Flag& a, const Flag& b) {
    return a.bases < b.bases;
  }
};

// Reduced row echelon form; returns the nonzero rows.
std::vector<std::vector<int>> rref(const FiniteField& f,
                                   std::vector<std::vector<int>> rows);
size_t rank_of(const FiniteField& f, std::vector<std::vector<int>> rows);

// Builds the flag with steps spanned by the first i chain vectors.
Flag flag_from_chain(const FiniteField& f,
                     const std::vector<std::vector<int>>& chain);
Flag standard_flag(const FiniteField& f, int n);
Flag reversed_standard_flag(const FiniteField& f, int n);

Flag frobenius_flag(const Flag& fl);

// The permutation w (1-indexed images) with the second flag in relative
// position w with respect to the first, from the rank array
// d_ij = dim(F_i cap F2_j) by inclusion-exclusion.
std::vector<int> relative_position(const Flag& a, const Flag& b);

std::vector<int> coxeter_permutation(int n);
std::vector<int> longest_permutation(int n);

// All flags F over the field with relative_position(F, frobenius(F)) = w.
// Enumerates chains with exact pruning on partial rank arrays; guard caps the
// number of flag chains visited.
std::vector<Flag> dl_points(const std::vector<int>& w, const FiniteField& f,
                            unsigned long long guard = 200000000ull);

struct ContainmentReport {
  size_t points = 0;
  size_t violations = 0;
  bool passed() const { return violations == 0; }
};

// For the Coxeter element: every point of the corresponding variety lies in
// the open cell (relative position w0 from the standard flag).
ContainmentReport lusztig_containment_check(int n, const FiniteField& f);

// F_p-linear independence of the coordinates of a nonzero vector: the line it
// spans generates a point of the Coxeter variety iff true.
bool moore_criterion(const std::vector<int>& a, const FiniteField& f);

}  // namespace weyl
