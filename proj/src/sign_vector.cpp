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

#include "hkom/sign_vector.hpp"

namespace hkom {

std::vector<int> mask_elements(ElementMask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

ElementMask mask_of(const std::vector<int>& elements) {
  ElementMask m = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxElements) throw std::out_of_range("element out of range");
    m |= bit(e);
  }
  return m;
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<Sign> signs;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '+') {
      signs.push_back(Sign::Plus);
    } else if (c == '-') {
      signs.push_back(Sign::Minus);
    } else if (c == '0') {
      signs.push_back(Sign::Zero);
    } else if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < text.size() &&
               static_cast<unsigned char>(text[i + 1]) == 0x88 &&
               static_cast<unsigned char>(text[i + 2]) == 0x92) {
      signs.push_back(Sign::Minus);  // U+2212
      i += 2;
    } else {
      throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
    }
  }
  return from_signs(signs);
}

SignVector SignVector::from_signs(const std::vector<Sign>& signs) {
  SignVector v(static_cast<int>(signs.size()));
  for (std::size_t e = 0; e < signs.size(); ++e) v.set(static_cast<int>(e), signs[e]);
  return v;
}

void SignVector::set(int e, Sign s) {
  if (e < 0 || e >= size_) throw std::out_of_range("SignVector::set");
  plus_ &= ~bit(e);
  minus_ &= ~bit(e);
  if (s == Sign::Plus) plus_ |= bit(e);
  if (s == Sign::Minus) minus_ |= bit(e);
}

SignVector SignVector::restricted(ElementMask keep) const {
  keep &= full_mask(size_);
  SignVector out(popcount(keep));
  int pos = 0;
  for (int e : mask_elements(keep)) {
    if (plus_ & bit(e)) out.plus_ |= bit(pos);
    if (minus_ & bit(e)) out.minus_ |= bit(pos);
    ++pos;
  }
  return out;
}

std::string SignVector::to_string() const {
  std::string s;
  s.reserve(size_);
  for (int e = 0; e < size_; ++e) s.push_back(to_char((*this)[e]));
  return s;
}

SignVector compose(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw SizeMismatch("compose: length mismatch");
  return compose_unchecked(x, y);
}

bool conforms(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw SizeMismatch("conforms: length mismatch");
  return conforms_unchecked(x, y);
}

}  // namespace hkom
