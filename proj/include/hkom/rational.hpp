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

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>
#include <vector>

namespace hkom {

using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

RationalVector make_vector(std::initializer_list<long> values);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
RationalVector scale(const RationalVector& a, const Rational& s);

/// Exact determinant of a square matrix by Gaussian elimination.
Rational determinant(RationalMatrix m);

/// Rank of a (not necessarily square) matrix.
int matrix_rank(RationalMatrix m);

/// A basis of the right null space {x : m x = 0}, each vector scaled to
/// integral entries with gcd 1.
std::vector<RationalVector> null_space(RationalMatrix m, int columns);

/// Hyperplane a.x = b through the given d points in R^d, if they are
/// affinely independent. Normal is primitive integral.
struct Hyperplane {
  RationalVector normal;
  Rational offset;
  Rational eval(const RationalVector& x) const { return dot(normal, x) - offset; }
};
std::optional<Hyperplane> hyperplane_through(const std::vector<RationalVector>& points);

/// Scales a nonzero vector to primitive integral form (gcd of numerators 1
/// after clearing denominators); sign preserved.
RationalVector primitive(const RationalVector& v);

std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

}  // namespace hkom
