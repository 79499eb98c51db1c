#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scw {

/// Fixed-length bit vector. Represents both solutions (bits over the set
/// collection) and element sets (bits over the universe). Set operators
/// follow the usual union/intersection/difference semantics.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  static BitVec of(std::size_t len, std::initializer_list<std::size_t> ones) {
    BitVec b(len);
    for (auto i : ones) b.set(i);
    return b;
  }

  std::size_t size() const { return len_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= 1ULL << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  BitVec operator|(const BitVec& o) const {
    check(o);
    BitVec r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }
  BitVec operator&(const BitVec& o) const {
    check(o);
    BitVec r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  /// Set difference: bits of *this not in o.
  BitVec operator-(const BitVec& o) const {
    check(o);
    BitVec r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  BitVec& operator|=(const BitVec& o) {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  BitVec& operator-=(const BitVec& o) {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool subset_of(const BitVec& o) const {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool intersects(const BitVec& o) const {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  std::size_t count_and(const BitVec& o) const {
    check(o);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  std::size_t count_diff(const BitVec& o) const {
    check(o);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & ~o.words_[i]);
    return c;
  }

  bool operator==(const BitVec& o) const { return len_ == o.len_ && words_ == o.words_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  /// Lexicographic order on the bit string read from index 0 upward,
  /// e.g. (0,1,1) < (1,0,0).
  bool lex_less(const BitVec& o) const {
    check(o);
    for (std::size_t i = 0; i < len_; ++i) {
      bool a = test(i), b = o.test(i);
      if (a != b) return !a;
    }
    return false;
  }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t v = words_[w];
      while (v) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(v)));
        v &= v - 1;
      }
    }
    return out;
  }

  /// Hex encoding: byte b holds bits [8b, 8b+8), bit index LSB-first;
  /// bytes emitted in order, two lowercase hex digits each.
  std::string to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    const std::size_t nbytes = (len_ + 7) / 8;
    out.reserve(nbytes * 2);
    for (std::size_t b = 0; b < nbytes; ++b) {
      unsigned byte = static_cast<unsigned>((words_[b >> 3] >> ((b & 7) * 8)) & 0xFF);
      out.push_back(digits[byte >> 4]);
      out.push_back(digits[byte & 0xF]);
    }
    return out;
  }

  static BitVec from_hex(const std::string& hex, std::size_t len) {
    BitVec b(len);
    auto val = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      return -1;
    };
    if (hex.size() != ((len + 7) / 8) * 2) throw std::invalid_argument("bad hex length");
    for (std::size_t b8 = 0; b8 * 2 < hex.size(); ++b8) {
      int hi = val(hex[b8 * 2]), lo = val(hex[b8 * 2 + 1]);
      if (hi < 0 || lo < 0) throw std::invalid_argument("bad hex digit");
      std::uint64_t byte = static_cast<std::uint64_t>(hi * 16 + lo);
      b.words_[b8 >> 3] |= byte << ((b8 & 7) * 8);
    }
    return b;
  }

  /// FNV-1a over the packed words; used for population digests.
  std::uint64_t fnv1a(std::uint64_t h = 0xCBF29CE484222325ULL) const {
    for (auto w : words_) {
      for (int i = 0; i < 8; ++i) {
        h ^= (w >> (i * 8)) & 0xFF;
        h *= 0x100000001B3ULL;
      }
    }
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec length mismatch");
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Solutions are bit vectors over the bound instance's set collection.
using Solution = BitVec;

}  // namespace scw
