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

#include "hkom/rational.hpp"

#include <stdexcept>
#include <utility>

namespace hkom {

namespace mp = boost::multiprecision;

RationalVector make_vector(std::initializer_list<long> values) {
  RationalVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

RationalVector scale(const RationalVector& a, const Rational& s) {
  RationalVector out(a);
  for (auto& x : out) x *= s;
  return out;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& m, int columns) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < columns && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (int k = 0; k < columns; ++k) m[r][k] -= factor * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, static_cast<int>(m.front().size())).size());
}

std::vector<RationalVector> null_space(RationalMatrix m, int columns) {
  std::vector<int> pivots = rref(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

RationalVector primitive(const RationalVector& v) {
  mp::mpz_int lcm_den = 1;
  for (const auto& x : v) {
    if (x != 0) lcm_den = mp::lcm(lcm_den, mp::mpz_int(mp::denominator(x)));
  }
  mp::mpz_int g = 0;
  for (const auto& x : v) {
    mp::mpz_int num = mp::mpz_int(mp::numerator(x)) * (lcm_den / mp::mpz_int(mp::denominator(x)));
    g = mp::gcd(g, num);
  }
  if (g == 0) return v;
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x * Rational(lcm_den) / Rational(g));
  return out;
}

std::optional<Hyperplane> hyperplane_through(const std::vector<RationalVector>& points) {
  if (points.empty()) return std::nullopt;
  const int d = static_cast<int>(points.front().size());
  if (static_cast<int>(points.size()) != d) return std::nullopt;
  // Solve [p_i, -1] . (a, b) = 0.
  RationalMatrix m;
  for (const auto& p : points) {
    RationalVector row(p);
    row.emplace_back(-1);
    m.push_back(std::move(row));
  }
  auto ns = null_space(m, d + 1);
  if (ns.size() != 1) return std::nullopt;
  RationalVector a(ns[0].begin(), ns[0].begin() + d);
  bool zero = true;
  for (const auto& x : a) zero = zero && x == 0;
  if (zero) return std::nullopt;
  return Hyperplane{a, ns[0][d]};
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace hkom
