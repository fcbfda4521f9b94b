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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hkom/rational.hpp"
#include "hkom/sign_vector.hpp"

namespace hkom {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binomial coefficient for small arguments; 0 when k < 0 or k > n.
std::int64_t binomial(int n, int k);

/// Colexicographic rank of a strictly increasing subset of {0..n-1}.
std::int64_t colex_rank(std::span<const int> sorted_subset);

/// The `index`-th r-subset of {0..n-1} in colex order.
std::vector<int> colex_unrank(std::int64_t index, int r);

/// Alternating sign map on r-subsets of an n-element ground set. Only sorted
/// subsets are stored, in colex order ({1,2,3,4}, {1,2,3,5}, {1,2,4,5}, ...).
class Chirotope {
 public:
  Chirotope(int n, int r, std::vector<Sign> signs);

  /// Single-line "n r signs" or the block layout of r digit rows followed by a
  /// sign row, each column naming one basis.
  static Chirotope parse(std::string_view text);

  int size() const { return n_; }
  int rank() const { return r_; }
  std::span<const Sign> signs() const { return signs_; }

  /// Sign of an increasing subset given as 0-based positions.
  Sign at_sorted(std::span<const int> subset) const {
    return signs_[static_cast<std::size_t>(colex_rank(subset))];
  }
  /// Sign of an arbitrary ordered tuple: alternating extension, zero on repeats.
  Sign operator()(std::span<const int> tuple) const;
  /// Convenience for 1-based element labels in increasing order.
  Sign basis_sign(std::initializer_list<int> one_based) const;

  bool is_uniform() const;

  /// Negates the sign of basis `subset` (0-based, any order). Throws when the
  /// basis sign is zero.
  Chirotope mutated(std::span<const int> subset) const;

  /// Reorientation: chi'(B) = chi(B) * (-1)^{|B ∩ R|}.
  Chirotope reoriented(ElementMask r) const;

  std::string to_line() const;

  friend bool operator==(const Chirotope& a, const Chirotope& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.signs_ == b.signs_;
  }

 private:
  int n_;
  int r_;
  std::vector<Sign> signs_;
};

/// Chirotope of n vectors in dimension r: sign of the determinant of every
/// r-subset taken in increasing order. Throws if all determinants vanish.
Chirotope chirotope_from_vectors(const std::vector<RationalVector>& vectors);

/// Reads a whole file and parses it with Chirotope::parse.
Chirotope read_chirotope_file(const std::string& path);

}  // namespace hkom
