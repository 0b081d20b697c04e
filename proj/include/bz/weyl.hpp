#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bz/chamber_weight.hpp"
#include "bz/support.hpp"

namespace bz {

// A finitely supported permutation of Z, with an optional generating word
// of simple reflections. word [i1,...,ik] means s_{i1} o ... o s_{ik}
// (s_{ik} applied first).
class WeylElement {
 public:
  WeylElement() = default;  // identity

  static WeylElement identity() { return WeylElement(); }
  static WeylElement simple(i64 i);
  static WeylElement from_word(const std::vector<i64>& word);

  i64 apply(i64 x) const;
  WeylElement inverse() const;
  // (a * b)(x) = a(b(x)).
  WeylElement operator*(const WeylElement& o) const;
  bool operator==(const WeylElement& o) const { return moved_ == o.moved_; }

  bool is_identity() const { return moved_.empty(); }
  // Number of inversions; finite since the support is.
  i64 length() const;
  // Points x with apply(x) != x.
  const std::map<i64, i64>& moved() const { return moved_; }
  std::optional<i64> min_moved() const;
  std::optional<i64> max_moved() const;

  const std::optional<std::vector<i64>>& word() const { return word_; }
  // A reduced word recomputed from the permutation.
  std::vector<i64> reduced_word() const;

  // w(gamma): -v Lambda_i -> -(w v) Lambda_i, i.e. S -> w(S).
  ChamberWeight act(const ChamberWeight& g) const;

  WeylElement sigma_shifted(i64 offset) const;

  std::string to_string() const;

 private:
  std::map<i64, i64> moved_;
  std::optional<std::vector<i64>> word_;

  void set_image(i64 x, i64 y);
};

// Longest element of W_I: reverses [lo, hi+1]; length m(m+1)/2.
WeylElement longest_element(const Interval& I);

// Diagram flip omega_I(i) = lo + hi - i.
i64 omega_flip(const Interval& I, i64 i);

inline WeylElement sigma_shift(const WeylElement& w, i64 ell, i64 k) {
  if (ell < 2) throw domain_error("sigma shift requires ell >= 2");
  return w.sigma_shifted(k * (ell + 1));
}

inline i64 sigma_shift(i64 index, i64 ell, i64 k) {
  if (ell < 2) throw domain_error("sigma shift requires ell >= 2");
  return checked_add(index, k * (ell + 1));
}

}  // namespace bz
