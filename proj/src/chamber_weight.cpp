#include "bz/chamber_weight.hpp"

#include <algorithm>
#include <sstream>

namespace bz {

ChamberWeight::ChamberWeight(i64 anchor, std::vector<i64> extras) : anchor_(anchor), extras_(std::move(extras)) {
  std::sort(extras_.begin(), extras_.end());
  extras_.erase(std::unique(extras_.begin(), extras_.end()), extras_.end());
  // Drop points already below the anchor, then absorb a contiguous run.
  while (!extras_.empty() && extras_.front() <= anchor_) extras_.erase(extras_.begin());
  while (!extras_.empty() && extras_.front() == anchor_ + 1) {
    anchor_ += 1;
    extras_.erase(extras_.begin());
  }
}

bool ChamberWeight::member(i64 p) const {
  if (p <= anchor_) return true;
  return std::binary_search(extras_.begin(), extras_.end(), p);
}

int ChamberWeight::pairing(i64 p) const {
  if (p + 1 <= anchor_) return 0;
  return (member(p + 1) ? 1 : 0) - (member(p) ? 1 : 0);
}

ChamberWeight ChamberWeight::reflect(i64 q) const {
  bool mq = member(q), mq1 = member(q + 1);
  if (mq == mq1) return *this;
  i64 base = std::min(anchor_, q - 1);
  std::vector<i64> tail;
  for (i64 x = base + 1; x <= anchor_; ++x) tail.push_back(x);
  tail.insert(tail.end(), extras_.begin(), extras_.end());
  for (i64& x : tail) {
    if (x == q)
      x = q + 1;
    else if (x == q + 1)
      x = q;
  }
  return ChamberWeight(base, std::move(tail));
}

ChamberWeight ChamberWeight::shifted(i64 offset) const {
  std::vector<i64> ex = extras_;
  for (i64& x : ex) x = checked_add(x, offset);
  ChamberWeight r;
  r.anchor_ = checked_add(anchor_, offset);
  r.extras_ = std::move(ex);
  return r;
}

bool ChamberWeight::operator<(const ChamberWeight& o) const {
  if (anchor_ != o.anchor_) return anchor_ < o.anchor_;
  return extras_ < o.extras_;
}

std::size_t ChamberWeight::hash() const {
  std::size_t h = std::hash<i64>{}(anchor_);
  for (i64 x : extras_) hash_mix(h, std::hash<i64>{}(x));
  return h;
}

std::string ChamberWeight::to_string() const {
  std::ostringstream os;
  os << "Z<=" << anchor_;
  if (!extras_.empty()) {
    os << "+{";
    for (std::size_t k = 0; k < extras_.size(); ++k) {
      if (k) os << ",";
      os << extras_[k];
    }
    os << "}";
  }
  return os.str();
}

ChamberWeight fundamental(const Interval& I, i64 i) {
  if (!I.contains(i)) throw domain_error("fundamental: index outside interval");
  std::vector<i64> ex;
  for (i64 x = i + 1; x <= I.hi + 1; ++x) ex.push_back(x);
  return ChamberWeight(I.lo - 1, std::move(ex));
}

}  // namespace bz
