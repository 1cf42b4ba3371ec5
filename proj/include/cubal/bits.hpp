#pragma once

#include <cstdint>
#include <bit>
#include <stdexcept>
#include <vector>

namespace cubal {

// Fixed-width bit vector. Unused high bits of the top word stay zero,
// so whole-word comparisons and popcounts are valid without masking.
class Bits {
public:
  Bits() = default;

  explicit Bits(unsigned width) : width_(width), w_((width + 63) / 64, 0) {}

  static Bits full(unsigned width) {
    Bits b(width);
    for (auto& w : b.w_) w = ~uint64_t{0};
    b.trim();
    return b;
  }

  static Bits single(unsigned width, unsigned i) {
    Bits b(width);
    b.set(i);
    return b;
  }

  unsigned width() const { return width_; }
  size_t word_count() const { return w_.size(); }
  uint64_t word(size_t i) const { return w_[i]; }
  uint64_t& word(size_t i) { return w_[i]; }

  bool test(unsigned i) const {
    check(i);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(unsigned i) {
    check(i);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(unsigned i) {
    check(i);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  unsigned count() const {
    unsigned c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  // index of the lowest set bit; width() when empty
  unsigned first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return unsigned(i * 64) + unsigned(std::countr_zero(w_[i]));
    return width_;
  }

  bool subset_of(const Bits& o) const {
    match(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    match(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits operator&(const Bits& o) const {
    match(o);
    Bits r(width_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    match(o);
    Bits r(width_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  Bits operator^(const Bits& o) const {
    match(o);
    Bits r(width_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] ^ o.w_[i];
    return r;
  }
  Bits operator~() const {
    Bits r(width_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }
  Bits minus(const Bits& o) const {
    match(o);
    Bits r(width_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }

  bool operator==(const Bits& o) const { return width_ == o.width_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // lexicographic on bit indices treated as a number (bit width-1 most significant
  // is NOT what we want; we compare as little-endian words from the top)
  bool operator<(const Bits& o) const {
    match(o);
    for (size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  std::vector<unsigned> indices() const {
    std::vector<unsigned> out;
    out.reserve(count());
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        out.push_back(unsigned(i * 64) + unsigned(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  // value as a single word; only valid when width <= 64
  uint64_t as_u64() const {
    if (width_ > 64) throw std::logic_error("Bits::as_u64: width exceeds 64");
    return w_.empty() ? 0 : w_[0];
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= size_t(w);
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  void check(unsigned i) const {
    if (i >= width_) throw std::out_of_range("Bits: index out of range");
  }
  void match(const Bits& o) const {
    if (width_ != o.width_) throw std::invalid_argument("Bits: width mismatch");
  }
  void trim() {
    if (width_ % 64 != 0 && !w_.empty())
      w_.back() &= (uint64_t{1} << (width_ % 64)) - 1;
  }

  unsigned width_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace cubal
