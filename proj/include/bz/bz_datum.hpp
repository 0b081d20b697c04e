#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bz/chamber_weight.hpp"
#include "bz/support.hpp"
#include "bz/weyl.hpp"

namespace bz {

// Gamma_I in the semi-infinite model is exactly
//   { Z_{<=lo-1} u T : T a nonempty proper subset of [lo, hi+1] },
// so a chamber weight of Gamma_I is a bitmask over [lo, hi+1]
// (bit k <-> point lo+k).
using Mask = std::uint32_t;

namespace gamma {

inline i64 points(const Interval& I) { return I.size() + 1; }
inline Mask full(const Interval& I) { return static_cast<Mask>((1u << points(I)) - 1); }
inline bool valid(const Interval& I, Mask m) { return m != 0 && m != full(I); }
inline i64 count(const Interval& I) { return (i64{1} << points(I)) - 2; }

// s_q for q in I swaps the bits of q and q+1.
inline Mask reflect(const Interval& I, Mask m, i64 q) {
  int b = static_cast<int>(q - I.lo);
  Mask lobit = (m >> b) & 1u, hibit = (m >> (b + 1)) & 1u;
  if (lobit == hibit) return m;
  return m ^ (Mask{1} << b) ^ (Mask{1} << (b + 1));
}

int pairing(const Interval& I, Mask m, i64 p);

// vpi_i^I <-> [i+1, hi+1].
Mask fundamental_mask(const Interval& I, i64 i);
// -vpi_i^I = w_0^I vpi_{omega_I(i)}^I <-> [lo, i].
Mask neg_fundamental_mask(const Interval& I, i64 i);
// -s_i vpi_i^I <-> [lo, i-1] u {i+1}.
Mask neg_s_fundamental_mask(const Interval& I, i64 i);

ChamberWeight to_weight(const Interval& I, Mask m);
std::optional<Mask> from_weight(const Interval& I, const ChamberWeight& g);

// w(T) for w in W_I (a permutation of [lo, hi+1]).
Mask act(const Interval& I, const WeylElement& w, Mask m);

// Gamma_I as chamber weights, via orbit closure of the fundamentals
// under the reflections s_q, q in I.
std::vector<ChamberWeight> enumerate(const Interval& I, i64 max_interval_size = 14);

}  // namespace gamma

// Total integer map on Gamma_I, stored densely by mask.
class BzDatum {
 public:
  static constexpr i64 kMaxIntervalSize = 14;

  explicit BzDatum(const Interval& I);
  static BzDatum zero(const Interval& I) { return BzDatum(I); }

  const Interval& interval() const { return interval_; }
  i64 component(Mask m) const;
  i64 component(const ChamberWeight& g) const;
  void set_component(Mask m, i64 v);

  bool operator==(const BzDatum& o) const { return interval_ == o.interval_ && comps_ == o.comps_; }
  const std::vector<i64>& raw() const { return comps_; }

  std::string to_json_string() const;
  static BzDatum from_json_string(const std::string& text);

 private:
  Interval interval_;
  std::vector<i64> comps_;
};

struct Violation {
  std::string kind;                // "edge" or "tpr"
  std::vector<i64> witness_word;   // reduced word of a witness w
  i64 i = 0;
  i64 j = 0;                       // tpr only
  i64 slack = 0;                   // lhs - rhs
  std::vector<Mask> masks;
  std::string describe(const Interval& I) const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Edge inequalities, in the subset form
//   M_{R+x} + M_{R+y} <= M_R + M_{R+x+y}
// with absent boundary terms (R empty / R+x+y full) read as 0.
ValidationReport check_edge(const BzDatum& M);

// Tropical Pluecker relations, in the subset form
//   M_{R+ac} + M_{R+b} = min(M_{R+bc} + M_{R+a}, M_{R+c} + M_{R+ab}),  a < b < c.
ValidationReport check_tpr(const BzDatum& M);

// All components at -vpi_i^I vanish.
bool in_bz(const BzDatum& M);

// M_K: components at Gamma_K, a literal subset of Gamma_I.
BzDatum restrict_down(const BzDatum& M, const Interval& K);
// M^K: components at Gamma_I^K = { w vpi_i^I : w in W_K, i in K }.
BzDatum restrict_up(const BzDatum& M, const Interval& K);

// wt(M) = sum_i M_{vpi_i} h_i as coroot coefficients indexed by I.
std::vector<i64> weight(const BzDatum& M);

struct MvVertex {
  WeylElement w;
  std::vector<i64> coroot_coeffs;  // mu_w(M) over {h_i : i in I}
};
// All vertices mu_w(M), w in W_I. Requires |I| <= 8.
std::vector<MvVertex> mv_vertices(const BzDatum& M);

// All w in W_I as permutations of [lo, hi+1].
std::vector<WeylElement> enumerate_weyl(const Interval& I, i64 max_interval_size = 8);

}  // namespace bz
