#pragma once

#include <vector>

#include "bz/support.hpp"

namespace bz {

// A chamber weight -w Lambda_i, encoded by the semi-infinite set
// S = w(Z_{<=i}) as (anchor, extras): S = Z_{<=anchor} u extras with
// extras a finite sorted set above anchor+1 (anchor maximal).
//
// pairing(p) = [p+1 in S] - [p in S] realizes <h_p, gamma>.
class ChamberWeight {
 public:
  ChamberWeight() = default;  // -Lambda_0, S = Z_{<=0}
  ChamberWeight(i64 anchor, std::vector<i64> extras);

  // -Lambda_i, S = Z_{<=i}.
  static ChamberWeight neg_lambda(i64 i) { return ChamberWeight(i, {}); }

  i64 anchor() const { return anchor_; }
  const std::vector<i64>& extras() const { return extras_; }

  bool member(i64 p) const;
  // <h_p, gamma> in {-1, 0, 1}.
  int pairing(i64 p) const;
  // anchor + |extras|; equals the index i of -w Lambda_i.
  i64 charge() const { return anchor_ + static_cast<i64>(extras_.size()); }
  // s_q gamma: swaps membership of q and q+1.
  ChamberWeight reflect(i64 q) const;
  // Translation by k steps of sigma(i) = i + ell + 1.
  ChamberWeight shifted(i64 offset) const;

  // Positions p with pairing(p) != 0 lie in [support_lo(), support_hi()].
  i64 support_lo() const { return anchor_; }
  i64 support_hi() const { return extras_.empty() ? anchor_ : extras_.back(); }

  bool operator==(const ChamberWeight& o) const = default;
  bool operator<(const ChamberWeight& o) const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  i64 anchor_ = 0;
  std::vector<i64> extras_;
};

struct cw_hash {
  std::size_t operator()(const ChamberWeight& w) const { return w.hash(); }
};

inline int pairing(i64 p, const ChamberWeight& g) { return g.pairing(p); }
inline ChamberWeight reflect(i64 q, const ChamberWeight& g) { return g.reflect(q); }

// sigma(x) = x + k (ell+1) on index sets.
inline ChamberWeight sigma_shift(const ChamberWeight& g, i64 ell, i64 k) {
  if (ell < 2) throw domain_error("sigma shift requires ell >= 2");
  return g.shifted(k * (ell + 1));
}

// vpi_i^I = -w_0^I Lambda_{omega_I(i)}; S = Z_{<=lo-1} u [i+1, hi+1].
ChamberWeight fundamental(const Interval& I, i64 i);

}  // namespace bz
