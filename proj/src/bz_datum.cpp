#include "bz/bz_datum.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bz {

namespace gamma {

int pairing(const Interval& I, Mask m, i64 p) {
  // S = Z_{<=lo-1} u T; membership of x in [lo, hi+1] is bit x-lo.
  auto member = [&](i64 x) -> int {
    if (x <= I.lo - 1) return 1;
    if (x > I.hi + 1) return 0;
    return static_cast<int>((m >> (x - I.lo)) & 1u);
  };
  return member(p + 1) - member(p);
}

Mask fundamental_mask(const Interval& I, i64 i) {
  if (!I.contains(i)) throw domain_error("fundamental_mask: index outside interval");
  Mask m = 0;
  for (i64 x = i + 1; x <= I.hi + 1; ++x) m |= Mask{1} << (x - I.lo);
  return m;
}

Mask neg_fundamental_mask(const Interval& I, i64 i) {
  if (!I.contains(i)) throw domain_error("neg_fundamental_mask: index outside interval");
  Mask m = 0;
  for (i64 x = I.lo; x <= i; ++x) m |= Mask{1} << (x - I.lo);
  return m;
}

Mask neg_s_fundamental_mask(const Interval& I, i64 i) {
  if (!I.contains(i)) throw domain_error("neg_s_fundamental_mask: index outside interval");
  Mask m = Mask{1} << (i + 1 - I.lo);
  for (i64 x = I.lo; x <= i - 1; ++x) m |= Mask{1} << (x - I.lo);
  return m;
}

ChamberWeight to_weight(const Interval& I, Mask m) {
  if (!valid(I, m)) throw domain_error("mask is not a chamber weight");
  std::vector<i64> extras;
  for (i64 k = 0; k < points(I); ++k)
    if ((m >> k) & 1u) extras.push_back(I.lo + k);
  return ChamberWeight(I.lo - 1, std::move(extras));
}

std::optional<Mask> from_weight(const Interval& I, const ChamberWeight& g) {
  if (g.anchor() < I.lo - 1) return std::nullopt;
  if (g.support_hi() > I.hi + 1 && !g.extras().empty() && g.extras().back() > I.hi + 1) return std::nullopt;
  if (g.anchor() > I.hi + 1) return std::nullopt;
  Mask m = 0;
  for (i64 x = I.lo; x <= std::min(g.anchor(), I.hi + 1); ++x) m |= Mask{1} << (x - I.lo);
  for (i64 x : g.extras()) {
    if (x > I.hi + 1) return std::nullopt;
    if (x >= I.lo) m |= Mask{1} << (x - I.lo);
  }
  if (!valid(I, m)) return std::nullopt;
  return m;
}

Mask act(const Interval& I, const WeylElement& w, Mask m) {
  Mask r = 0;
  for (i64 k = 0; k < points(I); ++k) {
    if ((m >> k) & 1u) {
      i64 y = w.apply(I.lo + k);
      if (y < I.lo || y > I.hi + 1) throw domain_error("permutation leaves the interval");
      r |= Mask{1} << (y - I.lo);
    }
  }
  return r;
}

std::vector<ChamberWeight> enumerate(const Interval& I, i64 max_interval_size) {
  if (I.size() > max_interval_size) throw capacity_error("interval too large for Gamma enumeration");
  std::set<ChamberWeight> seen;
  std::vector<ChamberWeight> stack;
  for (i64 i = I.lo; i <= I.hi; ++i) {
    ChamberWeight g = fundamental(I, i);
    if (seen.insert(g).second) stack.push_back(g);
  }
  while (!stack.empty()) {
    ChamberWeight g = stack.back();
    stack.pop_back();
    for (i64 q = I.lo; q <= I.hi; ++q) {
      ChamberWeight h = g.reflect(q);
      if (seen.insert(h).second) stack.push_back(h);
    }
  }
  return std::vector<ChamberWeight>(seen.begin(), seen.end());
}

}  // namespace gamma

BzDatum::BzDatum(const Interval& I) : interval_(I) {
  if (I.size() > kMaxIntervalSize) throw capacity_error("interval too large for dense BZ storage");
  comps_.assign(std::size_t{1} << gamma::points(I), 0);
}

i64 BzDatum::component(Mask m) const {
  if (!gamma::valid(interval_, m)) throw domain_error("component: mask is not a chamber weight");
  return comps_[m];
}

i64 BzDatum::component(const ChamberWeight& g) const {
  auto m = gamma::from_weight(interval_, g);
  if (!m) throw domain_error("component: weight not in Gamma_I");
  return comps_[*m];
}

void BzDatum::set_component(Mask m, i64 v) {
  if (!gamma::valid(interval_, m)) throw domain_error("set_component: mask is not a chamber weight");
  comps_[m] = v;
}

std::string BzDatum::to_json_string() const {
  nlohmann::ordered_json j;
  j["interval"] = {interval_.lo, interval_.hi};
  auto comps = nlohmann::ordered_json::array();
  Mask f = gamma::full(interval_);
  for (Mask m = 1; m < f; ++m) {
    ChamberWeight g = gamma::to_weight(interval_, m);
    nlohmann::ordered_json c;
    c["weight"] = {{"anchor", g.anchor()}, {"extras", g.extras()}};
    c["value"] = comps_[m];
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  return j.dump(2);
}

BzDatum BzDatum::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("interval") || !j.contains("components")) throw domain_error("datum JSON needs interval and components");
  Interval I(j["interval"][0].get<i64>(), j["interval"][1].get<i64>());
  BzDatum M(I);
  for (auto& c : j["components"]) {
    ChamberWeight g(c["weight"]["anchor"].get<i64>(), c["weight"]["extras"].get<std::vector<i64>>());
    auto m = gamma::from_weight(I, g);
    if (!m) throw domain_error("datum JSON weight not in Gamma_I");
    M.set_component(*m, c["value"].get<i64>());
  }
  return M;
}

namespace {

// A witness w in W_I for a subset-form instance: w sends i, i+1 (and i+2
// for tpr) to the named points and [i+k, hi+1] to R ascending.
WeylElement witness_perm(const Interval& I, const std::vector<i64>& top_points, Mask rest) {
  std::vector<i64> rest_pts, other;
  std::set<i64> used(top_points.begin(), top_points.end());
  for (i64 k = 0; k < gamma::points(I); ++k) {
    i64 x = I.lo + k;
    if ((rest >> k) & 1u) {
      rest_pts.push_back(x);
      used.insert(x);
    }
  }
  for (i64 x = I.lo; x <= I.hi + 1; ++x)
    if (!used.count(x)) other.push_back(x);
  // Domain order: [lo .. i-1], then top_points' slots, then [.. hi+1] for rest.
  std::vector<i64> images = other;
  images.insert(images.end(), top_points.begin(), top_points.end());
  images.insert(images.end(), rest_pts.begin(), rest_pts.end());
  WeylElement w;
  std::map<i64, i64> mv;
  for (std::size_t k = 0; k < images.size(); ++k) {
    i64 x = I.lo + static_cast<i64>(k);
    if (images[k] != x) mv[x] = images[k];
  }
  // Build via word to keep WeylElement consistent.
  WeylElement r;
  for (auto& [x, y] : mv) {
    (void)x;
    (void)y;
  }
  // Construct directly from the image list by composing transpositions.
  std::vector<i64> img = images;
  std::vector<i64> word;
  // Selection sort by adjacent transpositions records a reduced-ish word.
  for (std::size_t pass = 0; pass + 1 < img.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < img.size(); ++k) {
      if (img[k] > img[k + 1]) {
        std::swap(img[k], img[k + 1]);
        word.push_back(I.lo + static_cast<i64>(k));
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return WeylElement::from_word(word);
}

}  // namespace

std::string Violation::describe(const Interval& I) const {
  std::ostringstream os;
  os << kind << " violation at w=";
  os << "[";
  for (std::size_t k = 0; k < witness_word.size(); ++k) {
    if (k) os << ",";
    os << witness_word[k];
  }
  os << "], i=" << i;
  if (kind == "tpr") os << ", j=" << j;
  os << ", slack=" << slack << ", weights:";
  for (Mask m : masks) os << " " << gamma::to_weight(I, m).to_string();
  return os.str();
}

ValidationReport check_edge(const BzDatum& M) {
  const Interval& I = M.interval();
  i64 n = gamma::points(I);
  Mask f = gamma::full(I);
  ValidationReport rep;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Mask pair_bits = (Mask{1} << x) | (Mask{1} << y);
      Mask universe = f ^ pair_bits;
      Mask R = universe;
      while (true) {
        i64 lhs = M.raw()[R | (Mask{1} << x)] + M.raw()[R | (Mask{1} << y)];
        i64 rhs = (R != 0 ? M.raw()[R] : 0) + ((R | pair_bits) != f ? M.raw()[R | pair_bits] : 0);
        if (lhs > rhs) {
          Violation v;
          v.kind = "edge";
          i64 cnt = std::popcount(R);
          v.i = I.hi - cnt;
          v.witness_word = witness_perm(I, {I.lo + x, I.lo + y}, R).reduced_word();
          v.slack = lhs - rhs;
          v.masks = {R | (Mask{1} << x), R | (Mask{1} << y)};
          rep.violations.push_back(std::move(v));
        }
        if (R == 0) break;
        R = (R - 1) & universe;
      }
    }
  }
  return rep;
}

ValidationReport check_tpr(const BzDatum& M) {
  const Interval& I = M.interval();
  i64 n = gamma::points(I);
  Mask f = gamma::full(I);
  ValidationReport rep;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        Mask A = Mask{1} << a, B = Mask{1} << b, C = Mask{1} << c;
        Mask universe = f ^ (A | B | C);
        Mask R = universe;
        while (true) {
          i64 lhs = M.raw()[R | A | C] + M.raw()[R | B];
          i64 rhs = std::min(M.raw()[R | B | C] + M.raw()[R | A], M.raw()[R | C] + M.raw()[R | A | B]);
          if (lhs != rhs) {
            Violation v;
            v.kind = "tpr";
            i64 cnt = std::popcount(R);
            v.i = I.hi - 1 - cnt;
            v.j = v.i + 1;
            v.witness_word = witness_perm(I, {I.lo + a, I.lo + b, I.lo + c}, R).reduced_word();
            v.slack = lhs - rhs;
            v.masks = {R | A | C, R | B, R | B | C, R | A, R | C, R | A | B};
            rep.violations.push_back(std::move(v));
          }
          if (R == 0) break;
          R = (R - 1) & universe;
        }
      }
    }
  }
  return rep;
}

bool in_bz(const BzDatum& M) {
  const Interval& I = M.interval();
  for (i64 i = I.lo; i <= I.hi; ++i)
    if (M.component(gamma::neg_fundamental_mask(I, i)) != 0) return false;
  return true;
}

BzDatum restrict_down(const BzDatum& M, const Interval& K) {
  const Interval& I = M.interval();
  if (!I.contains(K)) throw domain_error("restrict_down: K not inside I");
  if (!in_bz(M)) throw domain_error("restrict_down requires an element of bz_I");
  BzDatum R(K);
  int shift = static_cast<int>(K.lo - I.lo);
  Mask prefix = (Mask{1} << shift) - 1;  // [lo, K.lo-1] filled
  Mask fk = gamma::full(K);
  for (Mask tk = 1; tk < fk; ++tk) R.set_component(tk, M.raw()[prefix | (tk << shift)]);
  return R;
}

BzDatum restrict_up(const BzDatum& M, const Interval& K) {
  const Interval& I = M.interval();
  if (!I.contains(K)) throw domain_error("restrict_up: K not inside I");
  if (!in_bz(M)) throw domain_error("restrict_up requires an element of bz_I");
  BzDatum R(K);
  int shift = static_cast<int>(K.lo - I.lo);
  // Points of [K.hi+2, I.hi+1] stay in every w vpi_i^I, w in W_K, i in K.
  Mask suffix = 0;
  for (i64 x = K.hi + 2; x <= I.hi + 1; ++x) suffix |= Mask{1} << (x - I.lo);
  Mask fk = gamma::full(K);
  for (Mask tk = 1; tk < fk; ++tk) R.set_component(tk, M.raw()[(tk << shift) | suffix]);
  return R;
}

std::vector<i64> weight(const BzDatum& M) {
  const Interval& I = M.interval();
  std::vector<i64> w;
  for (i64 i = I.lo; i <= I.hi; ++i) w.push_back(M.component(gamma::fundamental_mask(I, i)));
  return w;
}

std::vector<WeylElement> enumerate_weyl(const Interval& I, i64 max_interval_size) {
  if (I.size() > max_interval_size) throw capacity_error("interval too large for Weyl enumeration");
  std::vector<i64> img;
  for (i64 x = I.lo; x <= I.hi + 1; ++x) img.push_back(x);
  std::vector<WeylElement> out;
  std::sort(img.begin(), img.end());
  do {
    std::vector<i64> sorted = img;
    std::vector<i64> word;
    for (std::size_t pass = 0; pass + 1 < sorted.size(); ++pass)
      for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
        if (sorted[k] > sorted[k + 1]) {
          std::swap(sorted[k], sorted[k + 1]);
          word.push_back(I.lo + static_cast<i64>(k));
        }
    std::reverse(word.begin(), word.end());
    out.push_back(WeylElement::from_word(word));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<MvVertex> mv_vertices(const BzDatum& M) {
  const Interval& I = M.interval();
  std::vector<MvVertex> out;
  for (const WeylElement& w : enumerate_weyl(I)) {
    std::vector<i64> mu(I.size(), 0);
    for (i64 i = I.lo; i <= I.hi; ++i) {
      i64 coef = M.raw()[gamma::act(I, w, gamma::fundamental_mask(I, i))];
      if (coef == 0) continue;
      i64 a = w.apply(i), b = w.apply(i + 1);
      // w h_i = e_a - e_b = sign * sum of h_j over the gap.
      i64 sgn = a < b ? 1 : -1;
      for (i64 j = std::min(a, b); j < std::max(a, b); ++j) mu[j - I.lo] += sgn * coef;
    }
    out.push_back(MvVertex{w, std::move(mu)});
  }
  return out;
}

}  // namespace bz
