#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bz {

using i64 = std::int64_t;

// Precondition violations (bad index, K not inside I, malformed input).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured limit was hit: interval too large, node budget exhausted.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A window query did not stabilize before the window cap.
struct stabilization_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; indicates a bug, never bad input.
struct integrity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw integrity_error("integer overflow in add");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw integrity_error("integer overflow in sub");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw integrity_error("integer overflow in mul");
  return r;
}

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct vec_hash {
  std::size_t operator()(const std::vector<i64>& v) const {
    std::size_t h = v.size();
    for (i64 x : v) hash_mix(h, std::hash<i64>{}(static_cast<i64>(x)));
    return h;
  }
};

// I = {lo, lo+1, ..., hi}, nonempty.
struct Interval {
  i64 lo = 0;
  i64 hi = 0;

  Interval() = default;
  Interval(i64 l, i64 h) : lo(l), hi(h) {
    if (l > h) throw domain_error("interval lo > hi");
  }

  i64 size() const { return hi - lo + 1; }
  bool contains(i64 i) const { return lo <= i && i <= hi; }
  bool contains(const Interval& k) const { return lo <= k.lo && k.hi <= hi; }
  bool operator==(const Interval& o) const = default;
};

// Index pairing rules shared by the three Cartan types.
struct CartanSpec {
  enum class Kind { finite, a_infinity, affine };
  Kind kind = Kind::a_infinity;
  Interval interval;  // finite only
  i64 ell = 0;        // affine only, >= 2

  static CartanSpec finite(Interval I) {
    CartanSpec c;
    c.kind = Kind::finite;
    c.interval = I;
    return c;
  }
  static CartanSpec a_inf() { return CartanSpec{}; }
  static CartanSpec affine(i64 ell) {
    if (ell < 2) throw domain_error("affine level must be >= 2");
    CartanSpec c;
    c.kind = Kind::affine;
    c.ell = ell;
    return c;
  }

  i64 a(i64 i, i64 j) const {
    switch (kind) {
      case Kind::finite:
        if (!interval.contains(i) || !interval.contains(j)) throw domain_error("index outside interval");
        [[fallthrough]];
      case Kind::a_infinity: {
        i64 d = i > j ? i - j : j - i;
        return d == 0 ? 2 : (d == 1 ? -1 : 0);
      }
      case Kind::affine: {
        if (i < 0 || i > ell || j < 0 || j > ell) throw domain_error("index outside affine diagram");
        i64 d = i > j ? i - j : j - i;
        return d == 0 ? 2 : ((d == 1 || d == ell) ? -1 : 0);
      }
    }
    return 0;
  }
};

}  // namespace bz
