#include "weyl/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace weyl {

FiniteWeyl FiniteWeyl::identity(const RootDatum& d) {
  return from_matrix(IMat::identity(d.rank()), IMat::identity(d.rank()));
}

FiniteWeyl FiniteWeyl::simple(const RootDatum& d, int i) {
  if (i < 1 || i > d.rank())
    throw std::invalid_argument("FiniteWeyl::simple: node out of range");
  const int r = d.rank();
  IMat m = IMat::identity(r);
  // s_i(omega_j^vee) = omega_j^vee - delta_ij alpha_i^vee
  for (int k = 0; k < r; ++k) m.at(k, i - 1) -= d.cartan().at(k, i - 1);
  return from_matrix(m, m);
}

FiniteWeyl FiniteWeyl::mul(const FiniteWeyl& o) const {
  return from_matrix(m_.mul(o.m_), o.minv_.mul(minv_));
}

FiniteWeyl FiniteWeyl::inverse() const { return from_matrix(minv_, m_); }

bool FiniteWeyl::is_identity() const { return m_ == IMat::identity(m_.n); }

int FiniteWeyl::length(const RootDatum& d) const {
  int cnt = 0;
  for (const auto& alpha : d.positive_roots()) {
    IVec wa = apply_root(alpha);
    bool neg = std::all_of(wa.begin(), wa.end(), [](long long x) { return x <= 0; });
    if (neg) ++cnt;
  }
  return cnt;
}

std::vector<int> FiniteWeyl::word(const RootDatum& d) const {
  std::vector<int> w;
  FiniteWeyl x = *this;
  const int r = d.rank();
  while (!x.is_identity()) {
    bool found = false;
    for (int i = 1; i <= r && !found; ++i) {
      IVec ai(r, 0);
      ai[i - 1] = 1;
      IVec v = x.apply_root_inverse(ai);  // x^{-1}(alpha_i)
      bool neg = std::all_of(v.begin(), v.end(), [](long long t) { return t <= 0; });
      if (neg) {  // left descent
        w.push_back(i);
        x = simple(d, i).mul(x);
        found = true;
      }
    }
    if (!found) throw std::logic_error("FiniteWeyl::word: no descent");
  }
  return w;
}

AffineElement AffineElement::identity(const RootDatum& d) {
  return AffineElement(&d, IVec(d.rank(), 0), FiniteWeyl::identity(d));
}

AffineElement AffineElement::translation(const RootDatum& d, const IVec& lam) {
  if (int(lam.size()) != d.rank())
    throw std::invalid_argument("translation: dimension mismatch");
  return AffineElement(&d, lam, FiniteWeyl::identity(d));
}

AffineElement AffineElement::simple_reflection(const RootDatum& d, int node) {
  if (!d.is_valid_node(node))
    throw std::invalid_argument("simple_reflection: invalid affine node");
  if (!d.is_affine_node(node))
    return AffineElement(&d, IVec(d.rank(), 0), FiniteWeyl::simple(d, node));
  const auto& comp = d.component(d.component_of_node(node));
  const int r = d.rank();
  // s_0 = eps^{theta^vee} s_theta;  s_theta(v) = v - <theta, v> theta^vee
  IMat m = IMat::identity(r);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < r; ++j) m.at(k, j) -= comp.theta[j] * comp.theta_coroot[k];
  return AffineElement(&d, comp.theta_coroot, FiniteWeyl::from_matrix(m, m));
}

AffineElement AffineElement::mul(const AffineElement& o) const {
  if (d_ != o.d_) throw std::invalid_argument("mul: root datum mismatch");
  IVec lam = lam_;
  IVec ul = fin_.apply(o.lam_);
  for (size_t i = 0; i < lam.size(); ++i) lam[i] += ul[i];
  return AffineElement(d_, std::move(lam), fin_.mul(o.fin_));
}

AffineElement AffineElement::mul_simple(int node) const {
  return mul(simple_reflection(*d_, node));
}

AffineElement AffineElement::mul_simple_left(int node) const {
  return simple_reflection(*d_, node).mul(*this);
}

AffineElement AffineElement::inverse() const {
  FiniteWeyl ui = fin_.inverse();
  IVec lam = ui.apply(lam_);
  for (auto& x : lam) x = -x;
  return AffineElement(d_, std::move(lam), std::move(ui));
}

bool AffineElement::is_identity() const {
  return fin_.is_identity() &&
         std::all_of(lam_.begin(), lam_.end(), [](long long x) { return x == 0; });
}

RatVec AffineElement::apply(const RatVec& v) const {
  RatVec r = fin_.apply(v);
  for (size_t i = 0; i < r.size(); ++i) r[i] += Rat(lam_[i]);
  return r;
}

IVec AffineElement::apply(const IVec& v) const {
  IVec r = fin_.apply(v);
  for (size_t i = 0; i < r.size(); ++i) r[i] += lam_[i];
  return r;
}

int AffineElement::length() const {
  // l(eps^lam w) = sum_{a>0, w^{-1}a>0} |<a,lam>| + sum_{a>0, w^{-1}a<0} |<a,lam>-1|
  long long total = 0;
  for (const auto& alpha : d_->positive_roots()) {
    long long p = d_->pairing(alpha, lam_);
    IVec wi = fin_.apply_root_inverse(alpha);
    bool neg = std::all_of(wi.begin(), wi.end(), [](long long x) { return x <= 0; });
    long long t = neg ? p - 1 : p;
    total += t < 0 ? -t : t;
  }
  return int(total);
}

OmegaElem AffineElement::omega_part() const { return d_->omega_component(lam_); }

bool AffineElement::in_wa() const { return d_->omega_is_identity(omega_part()); }

bool AffineElement::has_right_descent(int node) const {
  return mul_simple(node).length() < length();
}

bool AffineElement::has_left_descent(int node) const {
  return mul_simple_left(node).length() < length();
}

size_t AffineElement::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](long long v) {
    h ^= size_t(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (long long v : lam_) mix(v);
  for (long long v : fin_.mat().a) mix(v);
  return h;
}

std::string AffineElement::str() const {
  std::ostringstream os;
  os << "eps^[";
  for (size_t i = 0; i < lam_.size(); ++i) os << (i ? "," : "") << lam_[i];
  os << "]*w";
  return os.str();
}

// ---------------------------------------------------------------------------

AffineWeyl::AffineWeyl(const RootDatum& d) : d_(&d) { build_omega_reps(); }

namespace {

// The unique u in W0 with inversion set {a>0 : u(a)<0} equal to inv
// (given as root coordinate vectors).  inv must be biconvex.
FiniteWeyl element_with_inversions(const RootDatum& d, std::vector<IVec> inv) {
  const int r = d.rank();
  std::vector<int> collected;
  while (!inv.empty()) {
    int pick = -1;
    for (int i = 1; i <= r && pick < 0; ++i) {
      IVec ai(r, 0);
      ai[i - 1] = 1;
      if (std::find(inv.begin(), inv.end(), ai) != inv.end()) pick = i;
    }
    if (pick < 0)
      throw std::logic_error("element_with_inversions: no simple root in set");
    collected.push_back(pick);
    FiniteWeyl s = FiniteWeyl::simple(d, pick);
    std::vector<IVec> next;
    IVec ap(r, 0);
    ap[pick - 1] = 1;
    for (auto& b : inv) {
      if (b == ap) continue;
      next.push_back(s.apply_root(b));
    }
    inv = std::move(next);
  }
  // u = s_{i_k} ... s_{i_1}
  FiniteWeyl u = FiniteWeyl::identity(d);
  for (auto it = collected.rbegin(); it != collected.rend(); ++it)
    u = u.mul(FiniteWeyl::simple(d, *it));
  return u;
}

}  // namespace

void AffineWeyl::build_omega_reps() {
  const RootDatum& d = *d_;
  const int r = d.rank();
  omega_reps_.assign(size_t(d.omega_order()), AffineElement());
  std::vector<bool> have(size_t(d.omega_order()), false);

  // Candidate minuscule coweights per component: 0 and the fundamental
  // coweights whose theta-coefficient is 1.
  std::vector<std::vector<IVec>> per_comp;
  for (int c = 0; c < d.num_components(); ++c) {
    const auto& comp = d.component(c);
    std::vector<IVec> cands;
    cands.push_back(IVec(r, 0));
    for (int i = comp.offset; i < comp.offset + comp.rank; ++i)
      if (comp.theta[i] == 1) {
        IVec v(r, 0);
        v[i] = 1;
        cands.push_back(v);
      }
    per_comp.push_back(std::move(cands));
  }
  std::vector<size_t> pick(per_comp.size(), 0);
  for (;;) {
    IVec lam(r, 0);
    for (size_t c = 0; c < per_comp.size(); ++c)
      for (int i = 0; i < r; ++i) lam[i] += per_comp[c][pick[c]][i];
    OmegaElem cls = d.omega_component(lam);
    size_t idx = size_t(d.omega_index(cls));
    if (!have[idx]) {
      std::vector<IVec> inv;
      for (const auto& alpha : d.positive_roots()) {
        long long p = d.pairing(alpha, lam);
        if (p != 0 && p != 1)
          throw std::logic_error("omega rep: candidate coweight not minuscule");
        if (p == 1) inv.push_back(alpha);
      }
      FiniteWeyl u = element_with_inversions(d, inv);
      AffineElement tau(&d, lam, u.inverse());
      if (tau.length() != 0)
        throw std::logic_error("omega rep: constructed element has length != 0");
      omega_reps_[idx] = tau;
      have[idx] = true;
    }
    // next combination
    size_t c = 0;
    while (c < pick.size() && ++pick[c] == per_comp[c].size()) pick[c++] = 0;
    if (c == pick.size()) break;
  }
  for (size_t i = 0; i < have.size(); ++i)
    if (!have[i])
      throw std::logic_error(
          "omega rep: some Omega class has no minuscule representative");
}

const AffineElement& AffineWeyl::omega_rep(const OmegaElem& cls) const {
  return omega_reps_[size_t(d_->omega_index(cls))];
}

std::vector<int> AffineWeyl::omega_node_action(const AffineElement& tau) const {
  std::vector<int> perm(size_t(d_->num_affine_nodes()), -1);
  AffineElement ti = tau.inverse();
  for (int t : d_->affine_node_ids()) {
    AffineElement conj = tau.mul(AffineElement::simple_reflection(*d_, t)).mul(ti);
    int found = -1;
    for (int s : d_->affine_node_ids())
      if (conj == AffineElement::simple_reflection(*d_, s)) {
        found = s;
        break;
      }
    if (found < 0)
      throw std::logic_error("omega_node_action: conjugate is not simple");
    perm[size_t(t)] = found;
  }
  return perm;
}

std::pair<Word, OmegaElem> AffineWeyl::reduced_word(const AffineElement& x) const {
  OmegaElem cls = x.omega_part();
  AffineElement xa = x.mul(omega_rep(cls).inverse());
  Word w;
  w.known_reduced = true;
  int len = xa.length();
  auto nodes = d_->affine_node_ids();
  while (len > 0) {
    bool found = false;
    for (int t : nodes) {
      AffineElement y = xa.mul_simple_left(t);
      int ly = y.length();
      if (ly < len) {
        w.nodes.push_back(t);
        xa = std::move(y);
        len = ly;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no left descent");
  }
  if (!xa.is_identity()) throw std::logic_error("reduced_word: residue not trivial");
  return {w, cls};
}

AffineElement AffineWeyl::from_word(const Word& w, const OmegaElem& cls) const {
  AffineElement x = AffineElement::identity(*d_);
  for (int t : w.nodes) x = x.mul_simple(t);
  return x.mul(omega_rep(cls));
}

std::set<int> AffineWeyl::support(const AffineElement& x) const {
  auto [w, cls] = reduced_word(x);
  (void)cls;
  return std::set<int>(w.nodes.begin(), w.nodes.end());
}

namespace {
IVec serialize(const AffineElement& x) {
  IVec k = x.lam();
  k.insert(k.end(), x.fin().mat().a.begin(), x.fin().mat().a.end());
  return k;
}
}  // namespace

bool AffineWeyl::bruhat_leq(const AffineElement& x, const AffineElement& y) const {
  if (!(x.omega_part() == y.omega_part())) return false;
  AffineElement ti = omega_rep(x.omega_part()).inverse();
  return bruhat_leq_wa(x.mul(ti), y.mul(ti));
}

bool AffineWeyl::bruhat_leq_wa(const AffineElement& x, const AffineElement& y) const {
  if (x == y) return true;
  int lx = x.length(), ly = y.length();
  if (lx >= ly) return false;
  if (lx == 0) return true;
  auto& memo = bruhat_cache_;
  auto key = std::make_pair(serialize(x), serialize(y));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool res = false;
  for (int t : d_->affine_node_ids()) {
    AffineElement ys = y.mul_simple(t);
    if (ys.length() < ly) {
      AffineElement xs = x.mul_simple(t);
      if (xs.length() < lx)
        res = bruhat_leq_wa(xs, ys);
      else
        res = bruhat_leq_wa(x, ys);
      break;
    }
  }
  memo[key] = res;
  if (memo.size() > 4000000) memo.clear();
  return res;
}

std::vector<IVec> AffineWeyl::finite_orbit(const IVec& lam) const {
  std::set<IVec> seen{lam};
  std::vector<IVec> out{lam};
  for (size_t h = 0; h < out.size(); ++h) {
    for (int i = 1; i <= d_->rank(); ++i) {
      IVec v = FiniteWeyl::simple(*d_, i).apply(out[h]);
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  return out;
}

IVec AffineWeyl::dominant_representative(const IVec& lam) const {
  IVec v = lam;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= d_->rank(); ++i)
      if (v[i - 1] < 0) {
        v = FiniteWeyl::simple(*d_, i).apply(v);
        moved = true;
      }
  }
  return v;
}

RatVec AffineWeyl::dominant_representative(const RatVec& in) const {
  RatVec v = in;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= d_->rank(); ++i)
      if (v[i - 1] < Rat(0)) {
        v = FiniteWeyl::simple(*d_, i).apply(v);
        moved = true;
      }
  }
  return v;
}

std::vector<AffineElement> AffineWeyl::admissible_set(const IVec& mu) const {
  if (int(mu.size()) != d_->rank())
    throw std::invalid_argument("admissible_set: dimension mismatch");
  for (long long c : mu)
    if (c < 0) throw std::invalid_argument("admissible_set: mu must be dominant");
  std::unordered_set<AffineElement, AffineElementHash> seen;
  OmegaElem cls = d_->omega_component(mu);
  const AffineElement& tau = omega_rep(cls);
  for (const IVec& nu : finite_orbit(mu)) {
    AffineElement t = AffineElement::translation(*d_, nu);
    auto [w, c2] = reduced_word(t);
    if (!(c2 == cls)) throw std::logic_error("admissible_set: class drift");
    size_t l = w.nodes.size();
    if (l > 24) throw std::invalid_argument("admissible_set: mu too large for subword enumeration");
    for (size_t mask = 0; mask < (size_t(1) << l); ++mask) {
      AffineElement x = AffineElement::identity(*d_);
      for (size_t i = 0; i < l; ++i)
        if (mask & (size_t(1) << i)) x = x.mul_simple(w.nodes[i]);
      seen.insert(x.mul(tau));
    }
  }
  std::vector<AffineElement> out(seen.begin(), seen.end());
  canonical_sort(out);
  return out;
}

AffineElement AffineWeyl::min_coset_rep(const AffineElement& x,
                                        const std::set<int>& K, Side side,
                                        const std::set<int>& K2) const {
  AffineElement y = x;
  const std::set<int>& right = (side == Side::Double) ? K2 : K;
  bool moved = true;
  while (moved) {
    moved = false;
    if (side == Side::Left || side == Side::Double) {
      for (int t : K) {
        AffineElement z = y.mul_simple_left(t);
        if (z.length() < y.length()) {
          y = std::move(z);
          moved = true;
          break;
        }
      }
      if (moved) continue;
    }
    if (side == Side::Right || side == Side::Double) {
      for (int t : right) {
        AffineElement z = y.mul_simple(t);
        if (z.length() < y.length()) {
          y = std::move(z);
          moved = true;
          break;
        }
      }
    }
  }
  return y;
}

bool AffineWeyl::subexpression_check(const std::vector<int>& chain,
                                     const AffineElement& w) const {
  if (chain.empty()) return true;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (!d_->is_valid_node(chain[i]))
      throw std::invalid_argument("subexpression_check: invalid node in chain");
    for (size_t j = i + 1; j < chain.size(); ++j)
      if (chain[i] == chain[j])
        throw std::invalid_argument("subexpression_check: chain nodes not distinct");
  }
  for (size_t i = 1; i < chain.size(); ++i) {
    AffineElement a = AffineElement::simple_reflection(*d_, chain[i - 1]);
    AffineElement b = AffineElement::simple_reflection(*d_, chain[i]);
    if (a.mul(b) == b.mul(a))
      throw std::invalid_argument(
          "subexpression_check: consecutive chain nodes commute");
  }
  auto [word, cls] = reduced_word(w);
  (void)cls;
  size_t pos = 0;
  for (int t : word.nodes) {
    if (pos < chain.size() && t == chain[pos]) ++pos;
  }
  return pos == chain.size();
}

std::vector<AffineElement> AffineWeyl::enumerate_wa(int radius) const {
  std::unordered_set<AffineElement, AffineElementHash> seen;
  std::vector<AffineElement> out;
  AffineElement e = AffineElement::identity(*d_);
  seen.insert(e);
  out.push_back(e);
  size_t lo = 0;
  for (int len = 1; len <= radius; ++len) {
    size_t hi = out.size();
    for (size_t i = lo; i < hi; ++i)
      for (int t : d_->affine_node_ids()) {
        AffineElement y = out[i].mul_simple(t);
        if (y.length() == len && seen.insert(y).second) out.push_back(y);
      }
    lo = hi;
  }
  canonical_sort(out);
  return out;
}

std::vector<AffineElement> AffineWeyl::enumerate_parabolic(const std::set<int>& P,
                                                           size_t cap) const {
  std::unordered_set<AffineElement, AffineElementHash> seen;
  std::vector<AffineElement> out;
  AffineElement e = AffineElement::identity(*d_);
  seen.insert(e);
  out.push_back(e);
  for (size_t h = 0; h < out.size(); ++h) {
    for (int t : P) {
      AffineElement y = out[h].mul_simple(t);
      if (seen.insert(y).second) {
        out.push_back(y);
        if (out.size() > cap)
          throw std::invalid_argument(
              "enumerate_parabolic: subgroup exceeds cap (infinite type?)");
      }
    }
  }
  canonical_sort(out);
  return out;
}

AffineElement AffineWeyl::longest_element(const std::set<int>& P) const {
  AffineElement x = AffineElement::identity(*d_);
  int len = 0;
  for (int steps = 0;; ++steps) {
    if (steps > 100000)
      throw std::invalid_argument("longest_element: W_P appears infinite");
    bool moved = false;
    for (int t : P) {
      AffineElement y = x.mul_simple(t);
      if (y.length() > len) {
        x = std::move(y);
        ++len;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return x;
}

std::vector<std::vector<int>> AffineWeyl::all_reduced_words(
    const AffineElement& x) const {
  OmegaElem cls = x.omega_part();
  AffineElement xa = x.mul(omega_rep(cls).inverse());
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(const AffineElement&, int)> rec = [&](const AffineElement& y,
                                                           int len) {
    if (len == 0) {
      out.push_back(cur);
      return;
    }
    for (int t : d_->affine_node_ids()) {
      AffineElement z = y.mul_simple_left(t);
      if (z.length() < len) {
        cur.push_back(t);
        rec(z, len - 1);
        cur.pop_back();
      }
    }
  };
  rec(xa, xa.length());
  return out;
}

std::pair<int, std::vector<int>> AffineWeyl::sort_key(const AffineElement& x) const {
  auto [w, cls] = reduced_word(x);
  (void)cls;
  return {int(w.nodes.size()), w.nodes};
}

void AffineWeyl::canonical_sort(std::vector<AffineElement>& v) const {
  std::vector<std::tuple<int, std::vector<int>, long long, size_t>> keys;
  keys.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    auto [l, w] = sort_key(v[i]);
    keys.emplace_back(l, w, d_->omega_index(v[i].omega_part()), i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<AffineElement> out;
  out.reserve(v.size());
  for (auto& k : keys) out.push_back(v[std::get<3>(k)]);
  v = std::move(out);
}

}  // namespace weyl
