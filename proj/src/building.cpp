#include "weyl/building.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace weyl {

Alcove::Alcove(AffineElement e) : elem(std::move(e)) {
  if (!elem.in_wa())
    throw std::invalid_argument("Alcove: element has nontrivial Omega part");
}

AffineElement Building::delta(const Alcove& x, const Alcove& y) const {
  return x.elem.inverse().mul(y.elem);
}

AffineElement Building::delta_k(const Alcove& x, const Alcove& y,
                                const std::set<int>& K) const {
  return w_->min_coset_rep(delta(x, y), K, AffineWeyl::Side::Double, K);
}

Hyperplane Building::normalize_wall(const IVec& root, long long level) const {
  auto [idx, sign] = d_->classify_root(root);
  if (sign == 0) throw std::invalid_argument("normalize_wall: not a root");
  Hyperplane h;
  h.root_index = idx;
  h.level = sign > 0 ? level : -level;
  return h;
}

Hyperplane Building::wall(const Alcove& x, int t) const {
  IVec root;
  long long c;
  d_->node_root(t, root, c);
  // wall of the base alcove: <root, v> = -c; image under eps^lam w is
  // <w(root), v> = -c + <w(root), lam>
  IVec wr = x.elem.fin().apply_root(root);
  long long k = -c + d_->pairing(wr, x.elem.lam());
  return normalize_wall(wr, k);
}

std::set<Hyperplane> Building::descent_walls(const Alcove& x) const {
  std::set<Hyperplane> out;
  RatVec bx = x.elem.apply(d_->base_alcove_barycenter());
  RatVec ba = d_->base_alcove_barycenter();
  for (int t : d_->affine_node_ids()) {
    Hyperplane h = wall(x, t);
    const IVec& alpha = d_->positive_roots()[size_t(h.root_index)];
    Rat k{h.level};
    bool xpos = d_->pairing(alpha, bx) > k;
    bool apos = d_->pairing(alpha, ba) > k;
    if (xpos != apos) out.insert(h);
  }
  return out;
}

Residue Building::residue(const Alcove& b, const std::set<int>& P) const {
  for (int t : P)
    if (!d_->is_valid_node(t))
      throw std::invalid_argument("residue: invalid node in type set");
  return Residue{b, P};
}

bool Building::residue_member(const Residue& r, const Alcove& y) const {
  AffineElement dlt = delta(r.base, y);
  return w_
      ->min_coset_rep(dlt, r.type, AffineWeyl::Side::Double, r.type)
      .is_identity();
}

bool Building::residues_equal(const Residue& r, const Residue& r2) const {
  return r.type == r2.type && residue_member(r, r2.base);
}

std::vector<Alcove> Building::residue_alcoves(const Residue& r,
                                              size_t cap) const {
  std::vector<Alcove> out;
  for (const AffineElement& u : w_->enumerate_parabolic(r.type, cap))
    out.push_back(Alcove(r.base.elem.mul(u)));
  return out;
}

Alcove Building::gate(const Alcove& b, const Residue& r) const {
  AffineElement m = w_->min_coset_rep(delta(b, r.base), r.type,
                                      AffineWeyl::Side::Right);
  return Alcove(b.elem.mul(m));
}

Alcove Building::project(const Alcove& x, const Residue& r) const {
  return gate(x, r);
}

DoubleProjectionResult Building::double_projection(const Residue& r,
                                                   const Residue& r2) const {
  DoubleProjectionResult res;
  res.w1 = w_->min_coset_rep(delta(r.base, r2.base), r.type,
                             AffineWeyl::Side::Double, r2.type);
  AffineElement w1i = res.w1.inverse();
  std::set<int> type1, type1p;
  for (int t : r.type) {
    AffineElement conj =
        w1i.mul(AffineElement::simple_reflection(*d_, t)).mul(res.w1);
    for (int u : r2.type)
      if (conj == AffineElement::simple_reflection(*d_, u)) {
        type1.insert(t);
        break;
      }
  }
  for (int t : r2.type) {
    AffineElement conj =
        res.w1.mul(AffineElement::simple_reflection(*d_, t)).mul(w1i);
    for (int u : r.type)
      if (conj == AffineElement::simple_reflection(*d_, u)) {
        type1p.insert(t);
        break;
      }
  }
  res.r1 = Residue{project(r2.base, r), type1};
  res.r1p = Residue{project(r.base, r2), type1p};
  return res;
}

Gallery Building::minimal_gallery(const Alcove& b, const Alcove& x) const {
  auto [word, cls] = w_->reduced_word(delta(b, x));
  if (!d_->omega_is_identity(cls))
    throw std::logic_error("minimal_gallery: distance not in W_a");
  Gallery g;
  g.alcoves.push_back(b);
  AffineElement cur = b.elem;
  for (int t : word.nodes) {
    cur = cur.mul_simple(t);
    g.alcoves.push_back(Alcove(cur));
  }
  return g;
}

bool Building::is_gallery(const Gallery& g) const {
  if (g.alcoves.empty()) return false;
  for (size_t i = 1; i < g.alcoves.size(); ++i) {
    AffineElement dlt = delta(g.alcoves[i - 1], g.alcoves[i]);
    bool simple = false;
    for (int t : d_->affine_node_ids())
      if (dlt == AffineElement::simple_reflection(*d_, t)) simple = true;
    if (!simple) return false;
  }
  return true;
}

bool Building::is_minimal(const Gallery& g) const {
  if (!is_gallery(g)) return false;
  return delta(g.alcoves.front(), g.alcoves.back()).length() ==
         int(g.alcoves.size()) - 1;
}

bool Building::goes_in_direction(const Gallery& g, const FiniteWeyl& w) const {
  RatVec bary = d_->base_alcove_barycenter();
  for (size_t i = 1; i < g.alcoves.size(); ++i) {
    AffineElement dlt = delta(g.alcoves[i - 1], g.alcoves[i]);
    int t = -1;
    for (int s : d_->affine_node_ids())
      if (dlt == AffineElement::simple_reflection(*d_, s)) t = s;
    if (t < 0) throw std::invalid_argument("goes_in_direction: not a gallery");
    Hyperplane h = wall(g.alcoves[i - 1], t);
    const IVec& alpha = d_->positive_roots()[size_t(h.root_index)];
    Rat val = d_->pairing(alpha, g.alcoves[i].elem.apply(bary)) - Rat(h.level);
    IVec wi = w.apply_root_inverse(alpha);
    bool alpha_wpos =
        std::all_of(wi.begin(), wi.end(), [](long long c) { return c >= 0; });
    // entering alcove must be on the w-positive side
    if (alpha_wpos ? !(val > Rat(0)) : !(val < Rat(0))) return false;
  }
  return true;
}

std::vector<FiniteWeyl> Building::gallery_direction(const Gallery& g) const {
  if (!is_gallery(g))
    throw std::invalid_argument("gallery_direction: not a gallery");
  std::vector<FiniteWeyl> out;
  for (const FiniteWeyl& w : enumerate_w0())
    if (goes_in_direction(g, w)) out.push_back(w);
  return out;
}

bool Building::acute_cone_member(const Alcove& b, const FiniteWeyl& w,
                                 const Alcove& x) const {
  if (x == b) return true;
  return goes_in_direction(minimal_gallery(b, x), w);
}

int Building::removed_node_of(const std::set<int>& K) const {
  std::vector<int> missing;
  for (int t : d_->affine_node_ids())
    if (!K.count(t)) missing.push_back(t);
  for (int t : K)
    if (!d_->is_valid_node(t))
      throw std::invalid_argument("far_from_walls: invalid node in K");
  if (missing.size() != 1)
    throw std::invalid_argument("far_from_walls: K must omit exactly one node");
  return missing[0];
}

bool Building::far_from_walls(const Alcove& x, const std::set<int>& K,
                              long long margin) const {
  if (margin < 1) throw std::invalid_argument("far_from_walls: margin must be >= 1");
  int v = removed_node_of(K);
  RatVec vert = d_->base_alcove_vertex(v);
  RatVec bx = x.elem.apply(d_->base_alcove_barycenter());
  for (const IVec& alpha : d_->positive_roots()) {
    Rat k0 = d_->pairing(alpha, vert);
    if (!k0.is_integer()) continue;  // no wall of this direction through the vertex
    Rat dist = (d_->pairing(alpha, bx) - k0).abs();
    if (dist < Rat(margin)) return false;
  }
  return true;
}

bool Building::separates_cosets(const AffineElement& w, const AffineElement& u,
                                const AffineElement& u2,
                                const std::set<int>& K) const {
  if (w_->min_coset_rep(u, K, AffineWeyl::Side::Right) ==
      w_->min_coset_rep(u2, K, AffineWeyl::Side::Right))
    throw std::invalid_argument("separates_cosets: uW_K = u2W_K");
  AffineElement a = w_->min_coset_rep(w.mul(u), K, AffineWeyl::Side::Double, K);
  AffineElement b = w_->min_coset_rep(w.mul(u2), K, AffineWeyl::Side::Double, K);
  return !(a == b);
}

DrEnumResult Building::enumerate_dr_subset(const std::set<Hyperplane>& H,
                                           int radius) const {
  DrEnumResult res;
  for (const AffineElement& x : w_->enumerate_wa(radius)) {
    Alcove a(x);
    std::set<Hyperplane> dw = descent_walls(a);
    bool inside = std::all_of(dw.begin(), dw.end(), [&](const Hyperplane& h) {
      return H.count(h) > 0;
    });
    if (!inside) continue;
    res.alcoves.push_back(a);
    ++res.count_at_radius;
    if (x.length() <= radius - 2) ++res.count_at_radius_minus_2;
  }
  res.stabilized = res.count_at_radius == res.count_at_radius_minus_2;
  return res;
}

Gallery Building::extend_gallery(const Gallery& g,
                                 const DiagramAutomorphism& sigmaJ,
                                 const std::set<int>& K, long long margin,
                                 int max_box) const {
  if (!d_->irreducible())
    throw std::invalid_argument("extend_gallery: reducible datum");
  if (!is_minimal(g))
    throw std::invalid_argument("extend_gallery: input gallery not minimal");
  const Alcove& start = g.alcoves.front();
  const Alcove& end = g.alcoves.back();
  AffineElement dse = delta(start, end);
  if (!sigmaJ.fixes(end.elem) || !sigmaJ.fixes(dse))
    throw std::invalid_argument(
        "extend_gallery: endpoint or distance not fixed by the automorphism");
  int base_len = dse.length();
  bool saw_fixed_translation = false;
  const int r = d_->rank();
  for (int box = 1; box <= max_box; ++box) {
    bool found = false;
    Alcove best;
    int best_len = 0;
    IVec best_lam;
    IVec lam(size_t(r), -box);
    for (;;) {
      long long mx = 0;
      for (long long c : lam) mx = std::max(mx, c < 0 ? -c : c);
      if (mx == box) {
        AffineElement tr = AffineElement::translation(*d_, lam);
        if (tr.in_wa()) {
          AffineElement y = end.elem.mul(tr);
          if (sigmaJ.fixes(y)) {
            if (!std::all_of(lam.begin(), lam.end(),
                             [](long long c) { return c == 0; }))
              saw_fixed_translation = true;
            Alcove ya(y);
            int ext = delta(end, ya).length();
            if (far_from_walls(ya, K, margin) &&
                delta(start, ya).length() == base_len + ext) {
              if (!found || ext < best_len ||
                  (ext == best_len && lam < best_lam)) {
                found = true;
                best = ya;
                best_len = ext;
                best_lam = lam;
              }
            }
          }
        }
      }
      // next vector in the box
      int i = 0;
      while (i < r && ++lam[size_t(i)] > box) lam[size_t(i++)] = -box;
      if (i == r) break;
    }
    if (found) return minimal_gallery(end, best);
  }
  throw std::runtime_error(
      saw_fixed_translation
          ? "extend_gallery: no fixed translation is far enough at this margin "
            "within the search box"
          : "extend_gallery: no nonzero fixed translation found (rational rank "
            "may be zero)");
}

std::vector<FiniteWeyl> Building::enumerate_w0() const {
  std::vector<FiniteWeyl> out{FiniteWeyl::identity(*d_)};
  std::set<std::vector<long long>> seen{out[0].mat().a};
  for (size_t h = 0; h < out.size(); ++h)
    for (int i = 1; i <= d_->rank(); ++i) {
      FiniteWeyl w = out[h].mul(FiniteWeyl::simple(*d_, i));
      if (seen.insert(w.mat().a).second) out.push_back(w);
    }
  return out;
}

}  // namespace weyl
