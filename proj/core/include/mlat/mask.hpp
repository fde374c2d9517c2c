#ifndef MLAT_MASK_HPP
#define MLAT_MASK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mlat {

/// Fixed-capacity bitset used for membership sets: subgroups, ideals,
/// subsets of a spectrum. Capacity is set at construction; two masks are
/// comparable only when their capacities agree. Ordering compares the
/// underlying bits as one big unsigned integer, which gives the canonical
/// "sorted by mask" enumeration order used throughout.
class Mask {
 public:
  Mask() = default;
  explicit Mask(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  static Mask single(int nbits, int bit) {
    Mask m(nbits);
    m.set(bit);
    return m;
  }
  static Mask full(int nbits) {
    Mask m(nbits);
    for (int i = 0; i < nbits; ++i) m.set(i);
    return m;
  }

  int capacity() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const;
  bool any() const;
  bool none() const { return !any(); }
  bool is_full() const { return count() == n_; }
  bool subset_of(const Mask& o) const;

  Mask operator&(const Mask& o) const;
  Mask operator|(const Mask& o) const;

  bool operator==(const Mask& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Mask& o) const { return !(*this == o); }
  bool operator<(const Mask& o) const;  // numeric order, most significant word first

  std::vector<int> members() const;
  std::string to_string() const;  // "{1,4,5}"

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace mlat

#endif
