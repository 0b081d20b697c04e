#include "bz/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace bz {

void WeylElement::set_image(i64 x, i64 y) {
  if (x == y)
    moved_.erase(x);
  else
    moved_[x] = y;
}

WeylElement WeylElement::simple(i64 i) {
  WeylElement w;
  w.moved_[i] = i + 1;
  w.moved_[i + 1] = i;
  w.word_ = std::vector<i64>{i};
  return w;
}

WeylElement WeylElement::from_word(const std::vector<i64>& word) {
  WeylElement w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = WeylElement::simple(*it) * w;
  w.word_ = word;
  return w;
}

i64 WeylElement::apply(i64 x) const {
  auto it = moved_.find(x);
  return it == moved_.end() ? x : it->second;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  for (auto& [x, y] : moved_) r.moved_[y] = x;
  if (word_) {
    std::vector<i64> w(word_->rbegin(), word_->rend());
    r.word_ = std::move(w);
  }
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement r;
  for (auto& [x, y] : o.moved_) {
    (void)y;
    r.set_image(x, apply(o.apply(x)));
  }
  for (auto& [x, y] : moved_) {
    (void)y;
    if (!o.moved_.count(x)) r.set_image(x, apply(o.apply(x)));
  }
  return r;
}

i64 WeylElement::length() const {
  if (moved_.empty()) return 0;
  i64 lo = moved_.begin()->first, hi = moved_.rbegin()->first;
  i64 inv = 0;
  for (i64 a = lo; a <= hi; ++a)
    for (i64 b = a + 1; b <= hi; ++b)
      if (apply(a) > apply(b)) ++inv;
  return inv;
}

std::optional<i64> WeylElement::min_moved() const {
  if (moved_.empty()) return std::nullopt;
  return moved_.begin()->first;
}

std::optional<i64> WeylElement::max_moved() const {
  if (moved_.empty()) return std::nullopt;
  return moved_.rbegin()->first;
}

std::vector<i64> WeylElement::reduced_word() const {
  // Peel left descents: w = s_i w' with l(w') = l(w) - 1 iff w^{-1}(i) > w^{-1}(i+1).
  std::vector<i64> out;
  WeylElement w = *this;
  while (!w.is_identity()) {
    WeylElement winv = w.inverse();
    i64 lo = w.moved_.begin()->first, hi = w.moved_.rbegin()->first;
    bool found = false;
    for (i64 i = lo; i < hi; ++i) {
      if (winv.apply(i) > winv.apply(i + 1)) {
        out.push_back(i);
        w = WeylElement::simple(i) * w;
        found = true;
        break;
      }
    }
    if (!found) throw integrity_error("no descent on a non-identity permutation");
  }
  return out;
}

ChamberWeight WeylElement::act(const ChamberWeight& g) const {
  if (moved_.empty()) return g;
  i64 base = std::min(g.anchor(), moved_.begin()->first - 1);
  std::vector<i64> tail;
  for (i64 x = base + 1; x <= g.anchor(); ++x) tail.push_back(apply(x));
  for (i64 x : g.extras()) tail.push_back(apply(x));
  return ChamberWeight(base, std::move(tail));
}

WeylElement WeylElement::sigma_shifted(i64 offset) const {
  WeylElement r;
  for (auto& [x, y] : moved_) r.moved_[checked_add(x, offset)] = checked_add(y, offset);
  if (word_) {
    std::vector<i64> w = *word_;
    for (i64& i : w) i = checked_add(i, offset);
    r.word_ = std::move(w);
  }
  return r;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  os << "w[";
  std::vector<i64> word = word_ ? *word_ : reduced_word();
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ",";
    os << word[k];
  }
  os << "]";
  return os.str();
}

WeylElement longest_element(const Interval& I) {
  std::vector<i64> word;
  for (i64 i = I.lo; i <= I.hi; ++i)
    for (i64 j = i; j >= I.lo; --j) word.push_back(j);
  WeylElement w = WeylElement::from_word(word);
  return w;
}

i64 omega_flip(const Interval& I, i64 i) {
  if (!I.contains(i)) throw domain_error("omega_flip: index outside interval");
  return I.lo + I.hi - i;
}

}  // namespace bz
