#include "weyl/root_datum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weyl {

IVec IMat::apply(const IVec& v) const {
  IVec r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
  return r;
}

RatVec IMat::apply(const RatVec& v) const {
  RatVec r(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += Rat(at(i, j)) * v[j];
  return r;
}

IVec IMat::apply_transpose(const IVec& v) const {
  IVec r(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) r[j] += v[i] * at(i, j);
  return r;
}

IMat IMat::mul(const IMat& o) const {
  IMat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

namespace {

IMat cartan_matrix(char type, int rank) {
  if (rank < 1) throw std::invalid_argument("root datum: rank must be >= 1");
  switch (type) {
    case 'A':
      break;
    case 'B':
    case 'C':
      if (rank < 2)
        throw std::invalid_argument("root datum: type B/C needs rank >= 2");
      break;
    case 'D':
      if (rank < 3)
        throw std::invalid_argument("root datum: type D needs rank >= 3");
      break;
    default:
      throw std::invalid_argument(std::string("root datum: unsupported type '") +
                                  type + "' (expected A, B, C, or D)");
  }
  IMat a(rank);
  for (int i = 0; i < rank; ++i) a.at(i, i) = 2;
  int chain = (type == 'D') ? rank - 2 : rank - 1;
  for (int i = 0; i + 1 <= chain; ++i) {
    a.at(i, i + 1) = -1;
    a.at(i + 1, i) = -1;
  }
  if (type == 'B') {
    // alpha_rank short: <alpha_{r-1}, alpha_r^vee> = -2
    a.at(rank - 2, rank - 1) = -2;
  } else if (type == 'C') {
    a.at(rank - 1, rank - 2) = -2;
  } else if (type == 'D') {
    a.at(rank - 3, rank - 1) = -1;
    a.at(rank - 1, rank - 3) = -1;
  }
  return a;
}

}  // namespace

RootDatum RootDatum::build(char type, int rank) {
  return build(std::vector<std::pair<char, int>>{{type, rank}});
}

RootDatum RootDatum::build(const std::vector<std::pair<char, int>>& comps) {
  if (comps.empty()) throw std::invalid_argument("root datum: no components");
  RootDatum d;
  int r = 0;
  for (auto& [t, k] : comps) {
    (void)cartan_matrix(t, k);  // validates
    r += k;
  }
  d.rank_ = r;
  d.cartan_ = IMat(r);
  int off = 0, cidx = 0;
  for (auto& [t, k] : comps) {
    IMat block = cartan_matrix(t, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) d.cartan_.at(off + i, off + j) = block.at(i, j);
    DynkinComponent c;
    c.type = t;
    c.rank = k;
    c.offset = off;
    c.affine_node = (cidx == 0) ? 0 : r + cidx;
    d.components_.push_back(c);
    off += k;
    ++cidx;
  }
  d.compute_roots();
  d.compute_smith();
  return d;
}

void RootDatum::compute_roots() {
  const int r = rank_;
  // Closure of the simple (root, coroot) pairs under simple reflections.
  std::set<IVec> seen;
  std::vector<std::pair<IVec, IVec>> all;  // (root alpha-coords, coroot alphavee-coords)
  for (int i = 0; i < r; ++i) {
    IVec e(r, 0);
    e[i] = 1;
    all.push_back({e, e});
    seen.insert(e);
  }
  for (size_t head = 0; head < all.size(); ++head) {
    auto [c, dv] = all[head];
    for (int i = 0; i < r; ++i) {
      // s_i(root): c' = c - (A^T c)_i e_i ; s_i(coroot): d' = d - (A d)_i e_i
      long long ci = 0, di = 0;
      for (int j = 0; j < r; ++j) {
        ci += cartan_.at(j, i) * c[j];
        di += cartan_.at(i, j) * dv[j];
      }
      IVec c2 = c, d2 = dv;
      c2[i] -= ci;
      d2[i] -= di;
      bool neg = std::all_of(c2.begin(), c2.end(), [](long long x) { return x <= 0; });
      if (neg) {
        for (auto& x : c2) x = -x;
        for (auto& x : d2) x = -x;
      }
      if (seen.insert(c2).second) all.push_back({c2, d2});
    }
  }
  std::sort(all.begin(), all.end());
  two_rho_.assign(r, 0);
  for (auto& [c, dv] : all) {
    root_index_[c] = int(pos_roots_.size());
    pos_roots_.push_back(c);
    pos_coroots_.push_back(dv);
    // coroot in fundamental-coweight coordinates: A * d
    IVec lam(r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) lam[i] += cartan_.at(i, j) * dv[j];
    pos_coroots_lambda_.push_back(lam);
    for (int i = 0; i < r; ++i) two_rho_[i] += c[i];
  }
  // Highest root per component: maximal height among roots supported there.
  for (auto& comp : components_) {
    long long best_h = -1;
    for (auto& c : pos_roots_) {
      bool in_comp = true;
      long long h = 0;
      for (int i = 0; i < r; ++i) {
        if (c[i] != 0 && (i < comp.offset || i >= comp.offset + comp.rank))
          in_comp = false;
        h += c[i];
      }
      if (in_comp && h > best_h) {
        best_h = h;
        comp.theta = c;
      }
    }
    auto [idx, sign] = classify_root(comp.theta);
    comp.theta_coroot = pos_coroots_lambda_[idx];
    (void)sign;
  }
}

void RootDatum::compute_smith() {
  // Smith normal form with row transform tracking: U * A * V = D.
  const int r = rank_;
  IMat m = cartan_;
  IMat u = IMat::identity(r);
  for (int k = 0; k < r; ++k) {
    for (;;) {
      // Move a nonzero of minimal absolute value into position (k,k).
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = k; i < r; ++i)
        for (int j = k; j < r; ++j) {
          long long v = m.at(i, j) < 0 ? -m.at(i, j) : m.at(i, j);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) throw std::runtime_error("smith: singular Cartan matrix");
      if (pi != k)
        for (int j = 0; j < r; ++j) {
          std::swap(m.at(pi, j), m.at(k, j));
          std::swap(u.at(pi, j), u.at(k, j));
        }
      if (pj != k)
        for (int i = 0; i < r; ++i) std::swap(m.at(i, pj), m.at(i, k));
      bool clean = true;
      for (int i = k + 1; i < r; ++i) {
        long long q = m.at(i, k) / m.at(k, k);
        if (q != 0) {
          for (int j = 0; j < r; ++j) {
            m.at(i, j) -= q * m.at(k, j);
            u.at(i, j) -= q * u.at(k, j);
          }
        }
        if (m.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < r; ++j) {
        long long q = m.at(k, j) / m.at(k, k);
        if (q != 0)
          for (int i = 0; i < r; ++i) m.at(i, j) -= q * m.at(i, k);
        if (m.at(k, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m.at(k, k) < 0)
      for (int j = 0; j < r; ++j) {
        m.at(k, j) = -m.at(k, j);
        u.at(k, j) = -u.at(k, j);
      }
  }
  // Any diagonalization U A V = D with unimodular U, V identifies
  // Lambda/Q^vee with the direct sum of Z/d_i; divisibility ordering of the
  // d_i is not needed for that.
  smith_u_ = u;
  smith_diag_.assign(r, 0);
  for (int k = 0; k < r; ++k) smith_diag_[k] = m.at(k, k);
}

long long RootDatum::pairing(const IVec& root, const IVec& lam) const {
  if (int(root.size()) != rank_ || int(lam.size()) != rank_)
    throw std::invalid_argument("pairing: dimension mismatch");
  long long s = 0;
  for (int i = 0; i < rank_; ++i) s += root[i] * lam[i];
  return s;
}

Rat RootDatum::pairing(const IVec& root, const RatVec& v) const {
  if (int(root.size()) != rank_ || int(v.size()) != rank_)
    throw std::invalid_argument("pairing: dimension mismatch");
  Rat s(0);
  for (int i = 0; i < rank_; ++i) s += Rat(root[i]) * v[i];
  return s;
}

std::pair<int, int> RootDatum::classify_root(const IVec& root) const {
  auto it = root_index_.find(root);
  if (it != root_index_.end()) return {it->second, 1};
  IVec neg(root.size());
  for (size_t i = 0; i < root.size(); ++i) neg[i] = -root[i];
  it = root_index_.find(neg);
  if (it != root_index_.end()) return {it->second, -1};
  return {-1, 0};
}

OmegaElem RootDatum::omega_component(const IVec& lam) const {
  if (int(lam.size()) != rank_)
    throw std::invalid_argument("omega_component: dimension mismatch");
  OmegaElem e;
  e.res.assign(rank_, 0);
  IVec um = smith_u_.apply(lam);
  for (int i = 0; i < rank_; ++i) {
    long long d = smith_diag_[i];
    e.res[i] = ((um[i] % d) + d) % d;
  }
  return e;
}

OmegaElem RootDatum::omega_identity() const {
  OmegaElem e;
  e.res.assign(rank_, 0);
  return e;
}

OmegaElem RootDatum::omega_add(const OmegaElem& a, const OmegaElem& b) const {
  OmegaElem e;
  e.res.assign(rank_, 0);
  for (int i = 0; i < rank_; ++i) e.res[i] = (a.res[i] + b.res[i]) % smith_diag_[i];
  return e;
}

OmegaElem RootDatum::omega_neg(const OmegaElem& a) const {
  OmegaElem e;
  e.res.assign(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    e.res[i] = (smith_diag_[i] - a.res[i]) % smith_diag_[i];
  return e;
}

bool RootDatum::omega_is_identity(const OmegaElem& a) const {
  return std::all_of(a.res.begin(), a.res.end(), [](long long x) { return x == 0; });
}

long long RootDatum::omega_order() const {
  long long n = 1;
  for (long long d : smith_diag_) n *= d;
  return n;
}

long long RootDatum::omega_index(const OmegaElem& a) const {
  long long idx = 0;
  for (int i = 0; i < rank_; ++i) idx = idx * smith_diag_[i] + a.res[i];
  return idx;
}

std::vector<int> RootDatum::affine_node_ids() const {
  std::vector<int> ids;
  ids.push_back(0);
  for (int i = 1; i <= rank_; ++i) ids.push_back(i);
  for (int c = 1; c < num_components(); ++c) ids.push_back(rank_ + c);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool RootDatum::is_valid_node(int id) const {
  return id >= 0 && id < rank_ + num_components() &&
         (id <= rank_ || num_components() > 1);
}

bool RootDatum::is_affine_node(int id) const {
  return id == 0 || id > rank_;
}

int RootDatum::component_of_node(int id) const {
  if (!is_valid_node(id)) throw std::invalid_argument("invalid affine node id");
  if (id == 0) return 0;
  if (id > rank_) return id - rank_;
  for (int c = 0; c < num_components(); ++c)
    if (id - 1 >= components_[c].offset &&
        id - 1 < components_[c].offset + components_[c].rank)
      return c;
  throw std::logic_error("component_of_node");
}

void RootDatum::node_root(int id, IVec& root, long long& level) const {
  if (!is_valid_node(id)) throw std::invalid_argument("invalid affine node id");
  if (is_affine_node(id)) {
    const auto& comp = components_[component_of_node(id)];
    root.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i) root[i] = -comp.theta[i];
    level = 1;
  } else {
    root.assign(rank_, 0);
    root[id - 1] = 1;
    level = 0;
  }
}

long long RootDatum::affine_cartan(int i, int j) const {
  // <alpha_i~, alpha_j~^vee> with alpha_0 = delta - theta (per component).
  auto root_of = [&](int id) -> IVec {
    IVec r;
    long long lvl;
    node_root(id, r, lvl);
    return r;
  };
  auto coroot_lambda_of = [&](int id) -> IVec {
    if (is_affine_node(id)) {
      const auto& comp = components_[component_of_node(id)];
      IVec r(rank_, 0);
      for (int k = 0; k < rank_; ++k) r[k] = -comp.theta_coroot[k];
      return r;
    }
    IVec r(rank_, 0);
    for (int k = 0; k < rank_; ++k) r[k] = cartan_.at(k, id - 1);
    return r;
  };
  if (i == j) return 2;
  return pairing(root_of(i), coroot_lambda_of(j));
}

bool RootDatum::nodes_adjacent(int i, int j) const {
  return i != j && affine_cartan(i, j) != 0;
}

RatVec RootDatum::base_alcove_barycenter() const {
  RatVec b(rank_, Rat(0));
  for (const auto& comp : components_) {
    // Vertices of the component simplex: 0 and omega_i^vee / c_i, where
    // theta = sum c_i alpha_i.
    for (int i = comp.offset; i < comp.offset + comp.rank; ++i)
      b[i] = Rat(1, comp.theta[i] * (comp.rank + 1));
  }
  return b;
}

RatVec RootDatum::base_alcove_vertex(int id) const {
  if (!is_valid_node(id)) throw std::invalid_argument("invalid affine node id");
  RatVec v(rank_, Rat(0));
  if (is_affine_node(id)) return v;  // the origin (special vertex)
  int i = id - 1;
  const auto& comp = components_[component_of_node(id)];
  v[i] = Rat(1, comp.theta[i]);
  return v;
}

std::string RootDatum::describe() const {
  std::ostringstream os;
  for (size_t c = 0; c < components_.size(); ++c) {
    if (c) os << "+";
    os << components_[c].type << components_[c].rank;
  }
  return os.str();
}

}  // namespace weyl
