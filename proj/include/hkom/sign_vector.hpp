// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hkom {

/// Maximum ground set size. Sign vectors are stored as a pair of bitmasks.
inline constexpr int kMaxElements = 32;

using ElementMask = std::uint32_t;

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign multiply(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
inline char to_char(Sign s) {
  return s == Sign::Plus ? '+' : (s == Sign::Minus ? '-' : '0');
}
template <typename T>
Sign sign_of(const T& v) {
  return v > 0 ? Sign::Plus : (v < 0 ? Sign::Minus : Sign::Zero);
}

inline ElementMask full_mask(int n) {
  return n >= 32 ? ~ElementMask{0} : ((ElementMask{1} << n) - 1);
}
inline ElementMask bit(int e) { return ElementMask{1} << e; }
inline int popcount(ElementMask m) { return std::popcount(m); }

/// Elements of a mask in increasing order.
std::vector<int> mask_elements(ElementMask m);
ElementMask mask_of(const std::vector<int>& elements);

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense vector over {-, 0, +} indexed by element positions 0..size-1.
/// Positive and negative parts are kept as disjoint bitmasks.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(int size) : size_(size) { check_size(size); }
  SignVector(int size, ElementMask plus, ElementMask minus)
      : plus_(plus), minus_(minus), size_(size) {
    check_size(size);
    if ((plus & minus) != 0 || ((plus | minus) & ~full_mask(size)) != 0)
      throw std::invalid_argument("SignVector: overlapping or out-of-range masks");
  }

  /// Parses "+-0" style strings ('-' and the unicode minus are accepted).
  static SignVector parse(std::string_view text);
  static SignVector from_signs(const std::vector<Sign>& signs);

  int size() const { return size_; }
  ElementMask plus() const { return plus_; }
  ElementMask minus() const { return minus_; }
  ElementMask support() const { return plus_ | minus_; }
  ElementMask zeros() const { return full_mask(size_) & ~support(); }
  bool is_zero() const { return support() == 0; }

  Sign operator[](int e) const {
    if (plus_ & bit(e)) return Sign::Plus;
    if (minus_ & bit(e)) return Sign::Minus;
    return Sign::Zero;
  }
  void set(int e, Sign s);

  SignVector operator-() const { return {size_, minus_, plus_, Raw{}}; }

  /// Negates the entries on `mask`.
  SignVector reoriented(ElementMask mask) const {
    ElementMask keep = ~mask;
    return {size_, (plus_ & keep) | (minus_ & mask), (minus_ & keep) | (plus_ & mask),
            Raw{}};
  }

  /// Same length, entries outside `keep` set to zero.
  SignVector masked(ElementMask keep) const { return {size_, plus_ & keep, minus_ & keep, Raw{}}; }

  /// Restriction to the positions in `keep`, compressed to a vector of length
  /// popcount(keep) preserving order.
  SignVector restricted(ElementMask keep) const;

  /// Lexicographic positivity: first nonzero entry is '+'.
  bool is_canonical() const {
    ElementMask s = support();
    return s == 0 || (plus_ & (s & (~s + 1))) != 0;
  }
  SignVector canonical() const { return is_canonical() ? *this : -*this; }

  std::uint64_t key() const {
    return static_cast<std::uint64_t>(plus_) | (static_cast<std::uint64_t>(minus_) << 32);
  }
  static SignVector from_key(int size, std::uint64_t key) {
    return {size, static_cast<ElementMask>(key), static_cast<ElementMask>(key >> 32),
            Raw{}};
  }

  std::string to_string() const;

  friend bool operator==(const SignVector& a, const SignVector& b) {
    return a.size_ == b.size_ && a.plus_ == b.plus_ && a.minus_ == b.minus_;
  }
  friend bool operator<(const SignVector& a, const SignVector& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.key() < b.key();
  }

 private:
  struct Raw {};
  SignVector(int size, ElementMask plus, ElementMask minus, Raw)
      : plus_(plus), minus_(minus), size_(size) {}
  static void check_size(int size) {
    if (size < 0 || size > kMaxElements)
      throw std::invalid_argument("SignVector: size out of range");
  }

  ElementMask plus_ = 0;
  ElementMask minus_ = 0;
  int size_ = 0;
};

/// (X o Y)_e = X_e if X_e != 0, else Y_e.
SignVector compose(const SignVector& x, const SignVector& y);

/// True iff X_e is 0 or Y_e for every e (X is a face of Y).
bool conforms(const SignVector& x, const SignVector& y);

/// Unchecked variants for hot loops where sizes are known to match.
inline SignVector compose_unchecked(const SignVector& x, const SignVector& y) {
  ElementMask free = ~x.support();
  return SignVector::from_key(
      x.size(), static_cast<std::uint64_t>(x.plus() | (y.plus() & free)) |
                    (static_cast<std::uint64_t>(x.minus() | (y.minus() & free)) << 32));
}
inline bool conforms_unchecked(const SignVector& x, const SignVector& y) {
  return (x.plus() & ~y.plus()) == 0 && (x.minus() & ~y.minus()) == 0;
}

/// Separation set S(X, Y) = {e : X_e = -Y_e != 0}.
inline ElementMask separation(const SignVector& x, const SignVector& y) {
  return (x.plus() & y.minus()) | (x.minus() & y.plus());
}

struct SignVectorHash {
  std::size_t operator()(const SignVector& v) const {
    return std::hash<std::uint64_t>{}(v.key() * 0x9E3779B97F4A7C15ULL + v.size());
  }
};

}  // namespace hkom
