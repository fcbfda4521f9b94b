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

#include "hkom/chirotope.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hkom {

namespace {

constexpr int kBinomialMax = 64;

const std::array<std::array<std::int64_t, kBinomialMax + 1>, kBinomialMax + 1>& binomial_table() {
  static const auto table = [] {
    std::array<std::array<std::int64_t, kBinomialMax + 1>, kBinomialMax + 1> t{};
    for (int n = 0; n <= kBinomialMax; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  lines.push_back(current);
  std::vector<std::string> out;
  for (auto& l : lines) {
    auto b = l.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = l.find_last_not_of(" \t");
    out.push_back(l.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Sign> parse_signs(std::string_view s) {
  std::vector<Sign> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '+') {
      out.push_back(Sign::Plus);
    } else if (c == '-') {
      out.push_back(Sign::Minus);
    } else if (c == '0') {
      out.push_back(Sign::Zero);
    } else if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < s.size() &&
               static_cast<unsigned char>(s[i + 1]) == 0x88 &&
               static_cast<unsigned char>(s[i + 2]) == 0x92) {
      out.push_back(Sign::Minus);  // U+2212
      i += 2;
    } else {
      throw ParseError(std::string("invalid sign character '") + c + "'");
    }
  }
  return out;
}

bool is_integer_token(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > kBinomialMax) throw std::out_of_range("binomial: n too large");
  return binomial_table()[n][k];
}

std::int64_t colex_rank(std::span<const int> sorted_subset) {
  std::int64_t rank = 0;
  for (std::size_t i = 0; i < sorted_subset.size(); ++i)
    rank += binomial(sorted_subset[i], static_cast<int>(i) + 1);
  return rank;
}

std::vector<int> colex_unrank(std::int64_t index, int r) {
  std::vector<int> subset(r);
  for (int i = r; i >= 1; --i) {
    int c = i - 1;
    while (binomial(c + 1, i) <= index) ++c;
    subset[i - 1] = c;
    index -= binomial(c, i);
  }
  return subset;
}

Chirotope::Chirotope(int n, int r, std::vector<Sign> signs) : n_(n), r_(r), signs_(std::move(signs)) {
  if (r < 1 || n < r || n > kMaxElements)
    throw ParseError("chirotope: need 1 <= r <= n <= " + std::to_string(kMaxElements));
  if (static_cast<std::int64_t>(signs_.size()) != binomial(n, r))
    throw ParseError("chirotope: expected " + std::to_string(binomial(n, r)) + " signs, got " +
                     std::to_string(signs_.size()));
  if (std::all_of(signs_.begin(), signs_.end(), [](Sign s) { return s == Sign::Zero; }))
    throw ParseError("chirotope: identically zero");
}

Chirotope Chirotope::parse(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("chirotope: empty input");

  std::istringstream first(lines.front());
  std::vector<std::string> tokens;
  for (std::string t; first >> t;) tokens.push_back(t);
  if (tokens.size() == 3 && is_integer_token(tokens[0]) && is_integer_token(tokens[1])) {
    if (lines.size() != 1) throw ParseError("chirotope: trailing lines after single-line form");
    int n = std::stoi(tokens[0]);
    int r = std::stoi(tokens[1]);
    return Chirotope(n, r, parse_signs(tokens[2]));
  }

  // Block layout: r rows of digits, one row of signs; column k is the k-th basis.
  if (lines.size() < 2) throw ParseError("chirotope: unrecognized format");
  const int r = static_cast<int>(lines.size()) - 1;
  const std::size_t width = lines.front().size();
  for (int i = 0; i < r; ++i) {
    if (lines[i].size() != width) throw ParseError("chirotope block: ragged index rows");
    for (char c : lines[i])
      if (c < '1' || c > '9') throw ParseError("chirotope block: index rows must be digits 1-9");
  }
  std::vector<Sign> signs = parse_signs(lines.back());
  if (signs.size() != width) throw ParseError("chirotope block: sign row length differs from index rows");
  int n = 0;
  for (int i = 0; i < r; ++i)
    for (char c : lines[i]) n = std::max(n, c - '0');
  if (static_cast<std::int64_t>(width) != binomial(n, r))
    throw ParseError("chirotope block: " + std::to_string(width) + " columns, expected C(" +
                     std::to_string(n) + "," + std::to_string(r) + ")");
  for (std::size_t col = 0; col < width; ++col) {
    std::vector<int> subset(r);
    for (int i = 0; i < r; ++i) subset[i] = lines[i][col] - '1';
    for (int i = 1; i < r; ++i)
      if (subset[i] <= subset[i - 1])
        throw ParseError("chirotope block: column " + std::to_string(col + 1) +
                         " is not a strictly increasing subset");
    if (colex_rank(subset) != static_cast<std::int64_t>(col))
      throw ParseError("chirotope block: column " + std::to_string(col + 1) +
                       " out of colexicographic order");
  }
  return Chirotope(n, r, std::move(signs));
}

Sign Chirotope::operator()(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != r_) throw std::invalid_argument("chirotope: wrong tuple size");
  std::vector<int> sorted(tuple.begin(), tuple.end());
  // Insertion sort counting transpositions.
  int swaps = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      ++swaps;
    }
  }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return Sign::Zero;
  for (int e : sorted)
    if (e < 0 || e >= n_) throw std::out_of_range("chirotope: element out of range");
  Sign s = at_sorted(sorted);
  return (swaps % 2) ? negate(s) : s;
}

Sign Chirotope::basis_sign(std::initializer_list<int> one_based) const {
  std::vector<int> t;
  for (int e : one_based) t.push_back(e - 1);
  return (*this)(t);
}

bool Chirotope::is_uniform() const {
  return std::none_of(signs_.begin(), signs_.end(), [](Sign s) { return s == Sign::Zero; });
}

Chirotope Chirotope::mutated(std::span<const int> subset) const {
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(sorted.size()) != r_) throw std::invalid_argument("mutate: wrong basis size");
  auto idx = static_cast<std::size_t>(colex_rank(sorted));
  if (signs_[idx] == Sign::Zero) throw std::invalid_argument("mutate: basis sign is zero");
  std::vector<Sign> s = signs_;
  s[idx] = negate(s[idx]);
  return Chirotope(n_, r_, std::move(s));
}

Chirotope Chirotope::reoriented(ElementMask r) const {
  std::vector<Sign> s = signs_;
  for (std::size_t i = 0; i < s.size(); ++i) {
    ElementMask basis = mask_of(colex_unrank(static_cast<std::int64_t>(i), r_));
    if (popcount(basis & r) % 2) s[i] = negate(s[i]);
  }
  return Chirotope(n_, r_, std::move(s));
}

std::string Chirotope::to_line() const {
  std::string s = std::to_string(n_) + " " + std::to_string(r_) + " ";
  for (Sign x : signs_) s.push_back(to_char(x));
  return s;
}

Chirotope chirotope_from_vectors(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("chirotope_from_vectors: no vectors");
  const int r = static_cast<int>(vectors.front().size());
  const int n = static_cast<int>(vectors.size());
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != r) throw std::invalid_argument("chirotope_from_vectors: ragged input");
  if (n < r) throw std::invalid_argument("chirotope_from_vectors: fewer vectors than dimension");
  std::int64_t count = binomial(n, r);
  std::vector<Sign> signs(static_cast<std::size_t>(count));
  bool any = false;
  for (std::int64_t i = 0; i < count; ++i) {
    auto subset = colex_unrank(i, r);
    RationalMatrix m;
    m.reserve(r);
    for (int e : subset) m.push_back(vectors[e]);
    // Columns are the vectors; det(M^T) = det(M).
    signs[static_cast<std::size_t>(i)] = sign_of(determinant(std::move(m)));
    any = any || signs[static_cast<std::size_t>(i)] != Sign::Zero;
  }
  if (!any) throw std::invalid_argument("chirotope_from_vectors: rank deficient configuration");
  return Chirotope(n, r, std::move(signs));
}

Chirotope read_chirotope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return Chirotope::parse(buf.str());
}

}  // namespace hkom
