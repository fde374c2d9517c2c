#include "mlat/mask.hpp"

#include <bit>

namespace mlat {

int Mask::count() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool Mask::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

bool Mask::subset_of(const Mask& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

Mask Mask::operator&(const Mask& o) const {
  Mask r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

Mask Mask::operator|(const Mask& o) const {
  Mask r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

bool Mask::operator<(const Mask& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (size_t i = w_.size(); i-- > 0;)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

std::vector<int> Mask::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::string Mask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace mlat
