#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyl {

// Exact rational number on 64-bit integers. All geometric predicates in this
// project are evaluated exactly; there is no floating point anywhere.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    long long g = std::gcd(a.den, b.den);
    long long bd = b.den / g;
    return Rat(a.num * bd + b.num * (a.den / g), a.den * bd);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return a + Rat(-b.num, b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rat((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("Rat: division by zero");
    return a * Rat(b.den, b.num);
  }
  Rat operator-() const { return Rat(-num, den); }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  bool is_integer() const { return den == 1; }
  Rat abs() const { return Rat(num < 0 ? -num : num, den); }
  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

using RatVec = std::vector<Rat>;

inline RatVec to_rat(const std::vector<long long>& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline RatVec rv_add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec rv_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec rv_scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// Square matrix of rationals, row-major.
struct RatMat {
  int n = 0;
  std::vector<Rat> a;

  RatMat() = default;
  explicit RatMat(int n_) : n(n_), a(size_t(n_) * n_) {}
  static RatMat identity(int n_) {
    RatMat m(n_);
    for (int i = 0; i < n_; ++i) m.at(i, i) = Rat(1);
    return m;
  }
  Rat& at(int i, int j) { return a[size_t(i) * n + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * n + j]; }

  RatVec apply(const RatVec& v) const {
    RatVec r(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      Rat s;
      for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
      r[size_t(i)] = s;
    }
    return r;
  }
  RatMat mul(const RatMat& o) const {
    RatMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (at(i, k) == Rat(0)) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }
  // Gauss-Jordan; throws if singular.
  RatMat inverse() const {
    RatMat m = *this, inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (m.at(r, col) != Rat(0)) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::invalid_argument("RatMat: singular matrix");
      if (piv != col)
        for (int j = 0; j < n; ++j) {
          std::swap(m.at(piv, j), m.at(col, j));
          std::swap(inv.at(piv, j), inv.at(col, j));
        }
      Rat d = m.at(col, col);
      for (int j = 0; j < n; ++j) {
        m.at(col, j) = m.at(col, j) / d;
        inv.at(col, j) = inv.at(col, j) / d;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || m.at(r, col) == Rat(0)) continue;
        Rat f = m.at(r, col);
        for (int j = 0; j < n; ++j) {
          m.at(r, j) -= f * m.at(col, j);
          inv.at(r, j) -= f * inv.at(col, j);
        }
      }
    }
    return inv;
  }
  friend bool operator==(const RatMat& x, const RatMat& y) {
    return x.n == y.n && x.a == y.a;
  }
};

}  // namespace weyl
