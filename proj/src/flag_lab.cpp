#include "weyl/flag_lab.hpp"

#include <algorithm>
#include <stdexcept>

namespace weyl {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors c_0..c_deg, trimmed.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& b, int p) {
  a = trim(std::move(a));
  while (a.size() >= b.size()) {
    int lead = a.back();  // b is monic
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      int t = (a[shift + i] - lead * b[i]) % p;
      a[shift + i] = (t + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(std::move(c));
}

bool is_irreducible(const Poly& f, int p) {
  int m = int(f.size()) - 1;
  // trial division by all monic polynomials of degree 1..m/2
  for (int deg = 1; 2 * deg <= m; ++deg) {
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (long long id = 0; id < count; ++id) {
      Poly g(size_t(deg) + 1, 0);
      long long v = id;
      for (int i = 0; i < deg; ++i) {
        g[size_t(i)] = int(v % p);
        v /= p;
      }
      g[size_t(deg)] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: p not prime");
  if (m < 1) throw std::invalid_argument("FiniteField: m must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > 4096) throw std::invalid_argument("FiniteField: field too large");
  }
  q_ = int(q);

  modulus_.assign(size_t(m) + 1, 0);
  modulus_[size_t(m)] = 1;
  if (m > 1) {
    bool found = false;
    for (int id = 0; id < q_ && !found; ++id) {
      Poly f(size_t(m) + 1, 0);
      int v = id;
      for (int i = 0; i < m; ++i) {
        f[size_t(i)] = v % p;
        v /= p;
      }
      f[size_t(m)] = 1;
      if (is_irreducible(f, p)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("FiniteField: no irreducible modulus");
  }

  auto to_poly = [this](int a) {
    Poly c;
    while (a > 0) {
      c.push_back(a % p_);
      a /= p_;
    }
    return c;
  };
  auto from_poly = [this](const Poly& c) {
    int a = 0;
    for (size_t i = c.size(); i-- > 0;) a = a * p_ + c[i];
    return a;
  };

  add_.assign(size_t(q_) * q_, 0);
  mul_.assign(size_t(q_) * q_, 0);
  neg_.assign(size_t(q_), 0);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      int s = 0, pw = 1;
      int x = a, y = b;
      for (int i = 0; i < m_; ++i) {
        s += ((x % p_ + y % p_) % p_) * pw;
        x /= p_;
        y /= p_;
        pw *= p_;
      }
      add_[size_t(a) * q_ + b] = s;
      mul_[size_t(a) * q_ + b] =
          from_poly(poly_mod(poly_mul(to_poly(a), to_poly(b), p_), modulus_, p_));
    }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b)
      if (add(a, b) == 0) neg_[size_t(a)] = b;
  inv_.assign(size_t(q_), 0);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[size_t(a)] = b;
  frob_.assign(size_t(q_), 0);
  for (int a = 0; a < q_; ++a) {
    int r = 1;
    for (int i = 0; i < p_; ++i) r = mul(r, a);
    frob_[size_t(a)] = r;
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::invalid_argument("FiniteField: inverse of zero");
  return inv_[size_t(a)];
}

std::vector<int> FiniteField::digits(int a) const {
  std::vector<int> d(static_cast<size_t>(m_));
  for (int i = 0; i < m_; ++i) {
    d[size_t(i)] = a % p_;
    a /= p_;
  }
  return d;
}

std::vector<std::vector<int>> rref(const FiniteField& f,
                                   std::vector<std::vector<int>> rows) {
  size_t r = 0;
  size_t n = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < n && r < rows.size(); ++col) {
    size_t piv = rows.size();
    for (size_t i = r; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    int iv = f.inv(rows[r][col]);
    for (auto& c : rows[r]) c = f.mul(c, iv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      int fac = rows[i][col];
      for (size_t j = 0; j < n; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(fac, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

size_t rank_of(const FiniteField& f, std::vector<std::vector<int>> rows) {
  return rref(f, std::move(rows)).size();
}

Flag flag_from_chain(const FiniteField& f,
                     const std::vector<std::vector<int>>& chain) {
  Flag fl;
  fl.f = &f;
  fl.n = int(chain.empty() ? 0 : chain[0].size());
  std::vector<std::vector<int>> acc;
  for (int i = 0; i < fl.n - 1; ++i) {
    if (i >= int(chain.size()))
      throw std::invalid_argument("flag_from_chain: chain too short");
    acc.push_back(chain[size_t(i)]);
    auto step = rref(f, acc);
    if (int(step.size()) != i + 1)
      throw std::invalid_argument("flag_from_chain: dependent chain vectors");
    fl.bases.push_back(std::move(step));
  }
  return fl;
}

Flag standard_flag(const FiniteField& f, int n) {
  std::vector<std::vector<int>> chain;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(size_t(n), 0);
    e[size_t(i)] = 1;
    chain.push_back(std::move(e));
  }
  return flag_from_chain(f, chain);
}

Flag reversed_standard_flag(const FiniteField& f, int n) {
  std::vector<std::vector<int>> chain;
  for (int i = n; i-- > 0;) {
    std::vector<int> e(size_t(n), 0);
    e[size_t(i)] = 1;
    chain.push_back(std::move(e));
  }
  return flag_from_chain(f, chain);
}

Flag frobenius_flag(const Flag& fl) {
  Flag out;
  out.n = fl.n;
  out.f = fl.f;
  for (const auto& step : fl.bases) {
    auto rows = step;
    for (auto& row : rows)
      for (auto& c : row) c = fl.f->frob(c);
    out.bases.push_back(rref(*fl.f, std::move(rows)));
  }
  return out;
}

std::vector<int> relative_position(const Flag& a, const Flag& b) {
  if (a.n != b.n || a.f != b.f)
    throw std::invalid_argument("relative_position: flag mismatch");
  int n = a.n;
  const FiniteField& f = *a.f;
  auto dim_cap = [&](int i, int j) -> int {
    if (i == 0 || j == 0) return 0;
    if (i == n) return j;
    if (j == n) return i;
    std::vector<std::vector<int>> rows = a.bases[size_t(i - 1)];
    for (const auto& row : b.bases[size_t(j - 1)]) rows.push_back(row);
    return i + j - int(rank_of(f, std::move(rows)));
  };
  std::vector<std::vector<int>> d(size_t(n) + 1,
                                  std::vector<int>(size_t(n) + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) d[size_t(i)][size_t(j)] = dim_cap(i, j);
  std::vector<int> w(size_t(n), 0);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      int c = d[size_t(i)][size_t(j)] - d[size_t(i - 1)][size_t(j)] -
              d[size_t(i)][size_t(j - 1)] + d[size_t(i - 1)][size_t(j - 1)];
      if (c == 1) {
        if (w[size_t(j - 1)] != 0)
          throw std::logic_error("relative_position: rank array invalid");
        w[size_t(j - 1)] = i;
      }
    }
  for (int v : w)
    if (v == 0) throw std::logic_error("relative_position: rank array invalid");
  return w;
}

std::vector<int> coxeter_permutation(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) w[size_t(i - 1)] = i + 1;
  w[size_t(n - 1)] = 1;
  return w;
}

std::vector<int> longest_permutation(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) w[size_t(i - 1)] = n + 1 - i;
  return w;
}

namespace {

// Incremental echelon basis over a finite field.
struct Echelon {
  const FiniteField* f;
  std::vector<std::vector<int>> rows;  // reduced, pivots strictly increasing

  explicit Echelon(const FiniteField& field) : f(&field) {}

  // Reduces v against the rows; returns true (and absorbs) if independent.
  bool add(std::vector<int> v) {
    for (const auto& row : rows) {
      size_t piv = 0;
      while (row[piv] == 0) ++piv;
      if (v[piv] != 0) {
        int fac = v[piv];
        for (size_t j = piv; j < v.size(); ++j)
          v[j] = f->sub(v[j], f->mul(fac, row[j]));
      }
    }
    size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    int iv = f->inv(v[piv]);
    for (size_t j = piv; j < v.size(); ++j) v[j] = f->mul(v[j], iv);
    rows.push_back(std::move(v));
    std::sort(rows.begin(), rows.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                size_t px = 0, py = 0;
                while (x[px] == 0) ++px;
                while (y[py] == 0) ++py;
                return px < py;
              });
    return true;
  }
};

struct DlSearch {
  const FiniteField* f;
  int n;
  const std::vector<int>* w;
  unsigned long long guard, visited = 0;
  std::vector<std::vector<int>> chain, sigma_chain;
  std::vector<Echelon> steps, sigma_steps;  // steps[i] = echelon of F_{i+1}
  std::vector<Flag> out;

  // #{k <= j : w(k) <= i}
  int target(int i, int j) const {
    int c = 0;
    for (int k = 1; k <= j; ++k)
      if ((*w)[size_t(k - 1)] <= i) ++c;
    return c;
  }

  bool check_level(int i) {
    // d(i, k) for k = 1..i via one incremental pass over sigma chain
    Echelon e = steps[size_t(i - 1)];
    for (int k = 1; k <= i; ++k) {
      e.add(sigma_chain[size_t(k - 1)]);
      int dim = i + k - int(e.rows.size());
      if (dim != target(i, k)) return false;
    }
    // d(k, i) for k = 1..i-1
    Echelon s = sigma_steps[size_t(i - 1)];
    for (int k = 1; k < i; ++k) {
      s.add(chain[size_t(k - 1)]);
      int dim = k + i - int(s.rows.size());
      if (dim != target(k, i)) return false;
    }
    return true;
  }

  void recurse(int i) {
    if (i == n - 1) {
      out.push_back(flag_from_chain(*f, [&] {
        std::vector<std::vector<int>> c = chain;
        c.push_back(std::vector<int>(size_t(n), 0));
        return c;
      }()));
      return;
    }
    // canonical representatives of lines in V / F_i: zero on the pivot
    // columns of F_i, leading coefficient 1 on the free columns
    std::vector<int> pivots(size_t(n), 0);
    if (i > 0)
      for (const auto& row : steps[size_t(i - 1)].rows) {
        size_t p = 0;
        while (row[p] == 0) ++p;
        pivots[p] = 1;
      }
    std::vector<int> freecols;
    for (int c = 0; c < n; ++c)
      if (!pivots[size_t(c)]) freecols.push_back(c);
    int nf = int(freecols.size());
    for (int lead = 0; lead < nf; ++lead) {
      int tailcount = nf - lead - 1;
      unsigned long long combos = 1;
      for (int t = 0; t < tailcount; ++t) combos *= unsigned(f->q());
      for (unsigned long long id = 0; id < combos; ++id) {
        if (++visited > guard)
          throw std::invalid_argument("dl_points: enumeration guard exceeded");
        std::vector<int> v(size_t(n), 0);
        v[size_t(freecols[size_t(lead)])] = 1;
        unsigned long long rest = id;
        for (int t = 0; t < tailcount; ++t) {
          v[size_t(freecols[size_t(lead + 1 + t)])] = int(rest % unsigned(f->q()));
          rest /= unsigned(f->q());
        }
        std::vector<int> sv = v;
        for (auto& c : sv) c = f->frob(c);

        chain.push_back(v);
        sigma_chain.push_back(sv);
        steps.push_back(i > 0 ? steps[size_t(i - 1)] : Echelon(*f));
        steps.back().add(v);
        sigma_steps.push_back(i > 0 ? sigma_steps[size_t(i - 1)] : Echelon(*f));
        sigma_steps.back().add(sv);
        if (check_level(i + 1)) recurse(i + 1);
        chain.pop_back();
        sigma_chain.pop_back();
        steps.pop_back();
        sigma_steps.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<Flag> dl_points(const std::vector<int>& w, const FiniteField& f,
                            unsigned long long guard) {
  int n = int(w.size());
  if (n < 2) throw std::invalid_argument("dl_points: n must be >= 2");
  std::vector<int> seen(size_t(n) + 1, 0);
  for (int v : w) {
    if (v < 1 || v > n || seen[size_t(v)])
      throw std::invalid_argument("dl_points: not a permutation");
    seen[size_t(v)] = 1;
  }
  DlSearch s;
  s.f = &f;
  s.n = n;
  s.w = &w;
  s.guard = guard;
  s.recurse(0);
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

ContainmentReport lusztig_containment_check(int n, const FiniteField& f) {
  ContainmentReport rep;
  std::vector<int> w0 = longest_permutation(n);
  Flag std_flag = standard_flag(f, n);
  for (const Flag& fl : dl_points(coxeter_permutation(n), f)) {
    ++rep.points;
    if (relative_position(std_flag, fl) != w0) ++rep.violations;
  }
  return rep;
}

bool moore_criterion(const std::vector<int>& a, const FiniteField& f) {
  bool nonzero = false;
  for (int c : a) nonzero = nonzero || c != 0;
  if (!nonzero) throw std::invalid_argument("moore_criterion: zero vector");
  int n = int(a.size());
  int m = f.m(), p = f.p();
  // columns: base-p digit expansions; rank over the prime field
  std::vector<std::vector<int>> mat(size_t(m), std::vector<int>(size_t(n), 0));
  for (int j = 0; j < n; ++j) {
    auto d = f.digits(a[size_t(j)]);
    for (int i = 0; i < m; ++i) mat[size_t(i)][size_t(j)] = d[size_t(i)];
  }
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int i = rank; i < m; ++i)
      if (mat[size_t(i)][size_t(col)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(mat[size_t(rank)], mat[size_t(piv)]);
    // scale pivot row to 1
    int pv = mat[size_t(rank)][size_t(col)];
    int pinv = 1;
    for (int t = 1; t < p; ++t)
      if (t * pv % p == 1) pinv = t;
    for (auto& c : mat[size_t(rank)]) c = c * pinv % p;
    for (int i = 0; i < m; ++i) {
      if (i == rank) continue;
      int fac = mat[size_t(i)][size_t(col)];
      if (fac == 0) continue;
      for (int j2 = 0; j2 < n; ++j2)
        mat[size_t(i)][size_t(j2)] =
            ((mat[size_t(i)][size_t(j2)] - fac * mat[size_t(rank)][size_t(j2)]) %
                 p +
             p) %
            p;
    }
    ++rank;
  }
  return rank == n;
}

}  // namespace weyl
