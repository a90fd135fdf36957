#include "weyl/sigma.hpp"

#include <algorithm>
#include <stdexcept>

namespace weyl {

// ---------------------------------------------------------------------------
// DiagramAutomorphism

DiagramAutomorphism DiagramAutomorphism::make(const RootDatum& d,
                                              std::vector<int> perm, RatMat lin,
                                              RatVec trans) {
  DiagramAutomorphism a;
  a.d_ = &d;
  a.perm_ = std::move(perm);
  a.lin_inv_ = lin.inverse();
  a.lin_ = std::move(lin);
  a.trans_ = std::move(trans);
  return a;
}

DiagramAutomorphism DiagramAutomorphism::identity(const RootDatum& d) {
  std::vector<int> perm(static_cast<size_t>(d.num_affine_nodes()));
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
  return make(d, std::move(perm), RatMat::identity(d.rank()),
              RatVec(size_t(d.rank())));
}

namespace {

// Solves M x = rhs for the (possibly overdetermined but consistent) system
// with rows `rows`; throws if inconsistent or underdetermined.
RatVec solve_linear(std::vector<RatVec> rows, RatVec rhs, int r) {
  size_t m = rows.size();
  for (size_t i = 0; i < m; ++i) rows[i].push_back(rhs[i]);
  size_t rank = 0;
  for (int col = 0; col < r && rank < m; ++col) {
    size_t piv = m;
    for (size_t i = rank; i < m; ++i)
      if (rows[i][size_t(col)] != Rat(0)) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    std::swap(rows[rank], rows[piv]);
    Rat dd = rows[rank][size_t(col)];
    for (auto& c : rows[rank]) c = c / dd;
    for (size_t i = 0; i < m; ++i) {
      if (i == rank) continue;
      Rat f = rows[i][size_t(col)];
      if (f == Rat(0)) continue;
      for (int j = 0; j <= r; ++j)
        rows[i][size_t(j)] -= f * rows[rank][size_t(j)];
    }
    ++rank;
  }
  if (rank < size_t(r))
    throw std::invalid_argument("diagram automorphism: wall system degenerate");
  for (size_t i = rank; i < m; ++i)
    if (rows[i][size_t(r)] != Rat(0))
      throw std::invalid_argument(
          "diagram automorphism: permutation admits no affine realization");
  // rows 0..r-1 are now the identity block in column order of pivots; since
  // rank == r and pivots are increasing they are exactly columns 0..r-1
  RatVec x(static_cast<size_t>(r));
  for (size_t i = 0; i < size_t(r); ++i) x[i] = rows[i][size_t(r)];
  return x;
}

}  // namespace

DiagramAutomorphism DiagramAutomorphism::from_node_perm(
    const RootDatum& d, const std::vector<int>& perm) {
  const int n = d.num_affine_nodes();
  const int r = d.rank();
  if (int(perm.size()) != n)
    throw std::invalid_argument("diagram automorphism: permutation size");
  std::vector<bool> seen(size_t(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[size_t(p)])
      throw std::invalid_argument("diagram automorphism: not a permutation");
    seen[size_t(p)] = true;
  }
  auto ids = d.affine_node_ids();
  for (int i : ids)
    for (int j : ids)
      if (d.affine_cartan(perm[size_t(i)], perm[size_t(j)]) !=
          d.affine_cartan(i, j))
        throw std::invalid_argument(
            "diagram automorphism: affine Cartan matrix not preserved");

  std::vector<IVec> root(static_cast<size_t>(n));
  std::vector<long long> cc(static_cast<size_t>(n));
  for (int i : ids) d.node_root(i, root[size_t(i)], cc[size_t(i)]);

  // wall functional of node i: f_i(v) = <root_i, v> + c_i; the affine map g
  // must satisfy f_{perm(i)} o g = f_i.
  std::vector<RatVec> rows;
  for (int i : ids) rows.push_back(to_rat(root[size_t(perm[size_t(i)])]));
  RatMat lt(r);  // transpose of the linear part
  for (int k = 0; k < r; ++k) {
    RatVec rhs;
    for (int i : ids) rhs.push_back(Rat(root[size_t(i)][size_t(k)]));
    RatVec row = solve_linear(rows, rhs, r);
    for (int j = 0; j < r; ++j) lt.at(k, j) = row[size_t(j)];
  }
  RatMat lin(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) lin.at(i, j) = lt.at(j, i);
  RatVec rhs_t;
  for (int i : ids)
    rhs_t.push_back(Rat(cc[size_t(i)] - cc[size_t(perm[size_t(i)])]));
  RatVec trans = solve_linear(rows, rhs_t, r);
  return make(d, perm, std::move(lin), std::move(trans));
}

DiagramAutomorphism DiagramAutomorphism::from_length_zero(
    const RootDatum& d, const AffineElement& tau) {
  if (tau.length() != 0)
    throw std::invalid_argument("from_length_zero: element has positive length");
  const int n = d.num_affine_nodes();
  std::vector<int> perm(size_t(n), -1);
  AffineElement ti = tau.inverse();
  for (int t : d.affine_node_ids()) {
    AffineElement conj = tau.mul(AffineElement::simple_reflection(d, t)).mul(ti);
    int found = -1;
    for (int s : d.affine_node_ids())
      if (conj == AffineElement::simple_reflection(d, s)) found = s;
    if (found < 0)
      throw std::logic_error("from_length_zero: conjugate not simple");
    perm[size_t(t)] = found;
  }
  const int r = d.rank();
  RatMat lin(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) lin.at(i, j) = Rat(tau.fin().mat().at(i, j));
  return make(d, std::move(perm), std::move(lin), to_rat(tau.lam()));
}

DiagramAutomorphism DiagramAutomorphism::compose(
    const DiagramAutomorphism& o) const {
  std::vector<int> perm(perm_.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = perm_[size_t(o.perm_[i])];
  RatVec trans = rv_add(lin_.apply(o.trans_), trans_);
  return make(*d_, std::move(perm), lin_.mul(o.lin_), std::move(trans));
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  std::vector<int> perm(perm_.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[size_t(perm_[i])] = int(i);
  RatVec trans = lin_inv_.apply(trans_);
  for (auto& c : trans) c = -c;
  return make(*d_, std::move(perm), lin_inv_, std::move(trans));
}

bool DiagramAutomorphism::is_identity() const {
  for (size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != int(i)) return false;
  return lin_ == RatMat::identity(d_->rank()) &&
         trans_ == RatVec(size_t(d_->rank()));
}

int DiagramAutomorphism::order() const {
  DiagramAutomorphism p = *this;
  for (int k = 1; k <= 256; ++k) {
    if (p.is_identity()) return k;
    p = p.compose(*this);
  }
  throw std::logic_error("DiagramAutomorphism: order overflow");
}

RatVec DiagramAutomorphism::apply_point(const RatVec& v) const {
  return rv_add(lin_.apply(v), trans_);
}

namespace {
IMat to_int_mat(const RatMat& m, const char* what) {
  IMat r(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      const Rat& c = m.at(i, j);
      if (!c.is_integer())
        throw std::logic_error(std::string(what) + ": non-integral image");
      r.at(i, j) = c.num;
    }
  return r;
}
}  // namespace

AffineElement DiagramAutomorphism::apply(const AffineElement& x) const {
  const int r = d_->rank();
  RatMat mx(r), mxi(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      mx.at(i, j) = Rat(x.fin().mat().at(i, j));
      mxi.at(i, j) = Rat(x.fin().inv_mat().at(i, j));
    }
  RatMat m2 = lin_.mul(mx).mul(lin_inv_);
  RatMat m2i = lin_.mul(mxi).mul(lin_inv_);
  // translation part of g x g^{-1}: -M' t + L lam + t
  RatVec t2 = rv_add(rv_sub(lin_.apply(to_rat(x.lam())), m2.apply(trans_)),
                     trans_);
  IVec lam(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    if (!t2[size_t(i)].is_integer())
      throw std::logic_error("DiagramAutomorphism: non-integral translation");
    lam[size_t(i)] = t2[size_t(i)].num;
  }
  return AffineElement(d_, std::move(lam),
                       FiniteWeyl::from_matrix(to_int_mat(m2, "automorphism"),
                                               to_int_mat(m2i, "automorphism")));
}

// ---------------------------------------------------------------------------
// CoxeterDatum

CoxeterDatum CoxeterDatum::make(const AffineWeyl& w,
                                const DiagramAutomorphism& sigma, const IVec& mu,
                                int removed_node) {
  const RootDatum& d = w.datum();
  if (!d.irreducible())
    throw std::invalid_argument("CoxeterDatum: affine diagram not connected");
  if (int(mu.size()) != d.rank())
    throw std::invalid_argument("CoxeterDatum: mu dimension mismatch");
  for (long long c : mu)
    if (c < 0) throw std::invalid_argument("CoxeterDatum: mu not dominant");
  if (!d.is_valid_node(removed_node))
    throw std::invalid_argument("CoxeterDatum: invalid removed node");
  if (sigma.perm(removed_node) != removed_node)
    throw std::invalid_argument("CoxeterDatum: K not stable under sigma");
  CoxeterDatum cd;
  cd.w = &w;
  cd.sigma = sigma;
  cd.mu = mu;
  cd.removed_node = removed_node;
  for (int t : d.affine_node_ids())
    if (t != removed_node) cd.K.insert(t);
  cd.tau = w.omega_rep(d.omega_component(mu));
  cd.sigma_j =
      DiagramAutomorphism::from_length_zero(d, cd.tau).compose(sigma);
  cd.tau_sigma_perm = cd.sigma_j.node_perm();
  return cd;
}

// ---------------------------------------------------------------------------
// SigmaOps

std::vector<int> SigmaOps::tau_sigma_orbit(int node) const {
  std::vector<int> orbit;
  int cur = node;
  do {
    orbit.push_back(cur);
    cur = cd_->tau_sigma_perm[size_t(cur)];
  } while (cur != node);
  return orbit;
}

std::set<int> SigmaOps::sigma_support(const AffineElement& x) const {
  std::set<int> out;
  for (int t : cd_->w->support(x))
    for (int s : tau_sigma_orbit(t)) out.insert(s);
  return out;
}

bool SigmaOps::is_sigma_coxeter(const AffineElement& x) const {
  auto [word, cls] = cd_->w->reduced_word(x);
  (void)cls;
  std::set<int> supp = sigma_support(x);
  std::set<int> done;
  for (int t : supp) {
    if (done.count(t)) continue;
    std::vector<int> orbit = tau_sigma_orbit(t);
    int count = 0;
    for (int letter : word.nodes)
      if (std::find(orbit.begin(), orbit.end(), letter) != orbit.end()) ++count;
    if (count != 1) return false;
    for (int s : orbit) done.insert(s);
  }
  return true;
}

std::set<int> SigmaOps::sigma_w_set(const AffineElement& x,
                                    const std::set<int>& supp) const {
  const RootDatum& d = cd_->datum();
  if (x.length() == 0) {
    std::set<int> out;
    for (int s : tau_sigma_orbit(cd_->removed_node)) out.insert(s);
    return out;
  }
  std::set<int> out;
  for (int t : d.affine_node_ids()) {
    if (supp.count(t)) continue;
    for (int s : supp)
      if (d.nodes_adjacent(t, s)) {
        out.insert(t);
        break;
      }
  }
  return out;
}

std::vector<EOElement> SigmaOps::enumerate_eo() const {
  const RootDatum& d = cd_->datum();
  std::vector<EOElement> out;
  for (const AffineElement& x : cd_->w->admissible_set(cd_->mu)) {
    bool kmin = true;
    for (int t : cd_->K)
      if (x.has_left_descent(t)) {
        kmin = false;
        break;
      }
    if (!kmin) continue;
    std::set<int> supp = sigma_support(x);
    if (int(supp.size()) == d.num_affine_nodes()) continue;
    if (!is_sigma_coxeter(x)) continue;
    out.push_back(EOElement{x, supp, sigma_w_set(x, supp)});
  }
  return out;
}

std::vector<AffineElement> SigmaOps::rational_elements(int radius) const {
  if (radius != rat_cache_radius_) {
    rat_cache_.clear();
    for (const AffineElement& x : cd_->w->enumerate_wa(radius))
      if (cd_->sigma_j.fixes(x)) rat_cache_.push_back(x);
    rat_cache_radius_ = radius;
  }
  return rat_cache_;
}

bool SigmaOps::is_rational(const AffineElement& x) const {
  return x.in_wa() && cd_->sigma_j.fixes(x);
}

bool SigmaOps::is_sigma_straight(const AffineElement& x) const {
  int lw = x.length();
  if (lw == 0) return true;
  int n = cd_->sigma.order();
  // twisted powers x sigma(x) sigma^2(x) ...
  AffineElement prod = x;
  AffineElement twisted = x;
  for (int k = 2; k <= 2 * n; ++k) {
    twisted = cd_->sigma.apply(twisted);
    prod = prod.mul(twisted);
    if (k <= n && prod.length() != k * lw) return false;
  }
  // Newton criterion: l(x) equals <2rho, nu> with nu the averaged dominant
  // translation vector of a pure-translation power of the n-fold product.
  AffineElement xn = x;
  twisted = x;
  for (int k = 2; k <= n; ++k) {
    twisted = cd_->sigma.apply(twisted);
    xn = xn.mul(twisted);
  }
  AffineElement pw = xn;
  int m = 1;
  while (!pw.fin().is_identity()) {
    pw = pw.mul(xn);
    ++m;
    if (m > 10000) throw std::logic_error("is_sigma_straight: power overflow");
  }
  IVec lam = cd_->w->dominant_representative(pw.lam());
  Rat lhs(lw);
  Rat rhs;
  const IVec& two_rho = cd_->datum().two_rho();
  for (size_t i = 0; i < lam.size(); ++i)
    rhs += Rat(two_rho[i] * lam[i], (long long)n * m);
  return lhs == rhs;
}

AffineElement SigmaOps::verify_constancy(const EOElement& e,
                                         const AffineElement& j) const {
  if (!is_rational(j))
    throw std::invalid_argument("verify_constancy: j is not rational");
  const std::set<int>& P = e.sigma_supp;
  Alcove ja(j);
  Residue R = b_.residue(b_.base(), P);
  Alcove g = b_.gate(ja, R);
  AffineElement w0p = cd_->w->longest_element(P);
  AffineElement d3 = b_.delta(ja, g);
  AffineElement val = d3.mul(w0p);
  if (val.length() != d3.length() + w0p.length())
    throw std::logic_error("verify_constancy: gate factorization not additive");
  for (const Alcove& h : b_.residue_alcoves(R)) {
    if (!(b_.delta(g, h) == w0p)) continue;
    if (!(b_.delta(ja, h) == val))
      throw std::logic_error("verify_constancy: value not constant on residue");
  }
  return val;
}

SeparatorResult SigmaOps::find_separator(const EOElement& e1,
                                         const EOElement& e2,
                                         const AffineElement& jprime,
                                         int search_radius) const {
  if (!is_rational(jprime))
    throw std::invalid_argument("find_separator: jprime is not rational");
  const RootDatum& d = cd_->datum();
  const std::set<int>& P = e1.sigma_supp;
  const std::set<int>& P2 = e2.sigma_supp;
  std::set<int> outside;  // S~ minus Sigma_{w2}
  for (int t : d.affine_node_ids())
    if (!e2.sigma_w.count(t)) outside.insert(t);
  bool jp_in_parabolic =
      cd_->w->min_coset_rep(jprime, outside, AffineWeyl::Side::Double, outside)
          .is_identity();
  if (e1 == e2 && jp_in_parabolic)
    throw std::invalid_argument("find_separator: strata coincide");

  Residue R = b_.residue(b_.base(), P);
  Residue R2 = b_.residue(Alcove(jprime), P2);
  AffineElement w0p = cd_->w->longest_element(P);
  AffineElement w0p2 = cd_->w->longest_element(P2);
  for (const AffineElement& j : rational_elements(search_radius)) {
    Alcove ja(j);
    Alcove g1 = b_.gate(ja, R);
    Alcove g2 = b_.gate(ja, R2);
    AffineElement v1 = b_.delta(ja, g1).mul(w0p);
    AffineElement v2 = b_.delta(ja, g2).mul(w0p2);
    AffineElement c1 =
        cd_->w->min_coset_rep(v1, cd_->K, AffineWeyl::Side::Double, cd_->K);
    AffineElement c2 =
        cd_->w->min_coset_rep(v2, cd_->K, AffineWeyl::Side::Double, cd_->K);
    if (!(c1 == c2)) {
      SeparatorResult res;
      res.j = j;
      res.val1 = c1;
      res.val2 = c2;
      AffineElement cert = w0p.mul(b_.delta(g1, g2)).mul(w0p2);
      res.support_certificate =
          cd_->w->support(cert).count(cd_->removed_node) > 0;
      return res;
    }
  }
  throw std::runtime_error(
      "find_separator: search radius " + std::to_string(search_radius) +
      " exhausted over " + std::to_string(rational_elements(search_radius).size()) +
      " rational alcoves without separating the strata");
}

BtCheckReport SigmaOps::bt_vs_j_check(int radius, int search_radius) const {
  const RootDatum& d = cd_->datum();
  BtCheckReport rep;
  std::vector<EOElement> eos = enumerate_eo();
  for (const EOElement& e : eos) {
    std::set<int> ptype;  // S~ minus Sigma_w
    for (int t : d.affine_node_ids())
      if (!e.sigma_w.count(t)) ptype.insert(t);
    std::vector<AffineElement> u_fixed;
    for (const AffineElement& u : cd_->w->enumerate_parabolic(ptype))
      if (cd_->sigma_j.fixes(u)) u_fixed.push_back(u);
    std::set<std::pair<int, std::vector<int>>> seen;
    for (const AffineElement& i : rational_elements(radius)) {
      // canonical representative of the coset i (J cap W_ptype)
      AffineElement best = i;
      auto best_key = cd_->w->sort_key(i);
      for (const AffineElement& u : u_fixed) {
        AffineElement c = i.mul(u);
        auto k = cd_->w->sort_key(c);
        if (k < best_key) {
          best = c;
          best_key = k;
        }
      }
      if (seen.insert(best_key).second)
        rep.labels.push_back(BTStratumLabel{e, best});
    }
  }
  for (size_t a = 0; a < rep.labels.size(); ++a)
    for (size_t b = a + 1; b < rep.labels.size(); ++b) {
      const BTStratumLabel& la = rep.labels[a];
      const BTStratumLabel& lb = rep.labels[b];
      ++rep.pairs_tested;
      AffineElement jp = la.coset_rep.inverse().mul(lb.coset_rep);
      try {
        find_separator(la.eo, lb.eo, jp, search_radius);
        ++rep.pairs_separated;
      } catch (const std::exception&) {
        rep.failures.emplace_back(a, b);
      }
    }
  return rep;
}

}  // namespace weyl
