// Copyright 2026 The matqsym Authors.
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

#include "matqsym/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "matqsym/errors.hpp"

namespace matqsym {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Int::Int(const BigInt& v) { *this = normalize(v); }

Int Int::normalize(BigInt v) {
  Int out;
  if (v >= kMin && v <= kMax) {
    out.small_ = static_cast<std::int64_t>(v);
  } else {
    out.big_ = std::make_shared<const BigInt>(std::move(v));
  }
  return out;
}

Int Int::parse(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw InvalidInput("bad integer literal: " + std::string(text));
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw InvalidInput("bad integer literal: " + std::string(text));
    }
  }
  return Int(BigInt(std::string(text[0] == '+' ? text.substr(1) : text)));
}

int Int::sign() const {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

std::int64_t Int::to_int64() const {
  if (big_) throw std::overflow_error("Int does not fit in int64");
  return small_;
}

BigInt Int::to_big() const { return big_ ? *big_ : BigInt(small_); }

std::string Int::str() const { return big_ ? big_->str() : std::to_string(small_); }

Int Int::operator-() const {
  if (!big_ && small_ != kMin) return Int(-small_);
  return normalize(-to_big());
}

Int& Int::operator+=(const Int& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  return *this = normalize(to_big() + o.to_big());
}

Int& Int::operator-=(const Int& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  return *this = normalize(to_big() - o.to_big());
}

Int& Int::operator*=(const Int& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  return *this = normalize(to_big() * o.to_big());
}

Int Int::divexact(const Int& o) const {
  if (o.is_zero()) throw InvalidInput("division by zero");
  if (!big_ && !o.big_ && !(small_ == kMin && o.small_ == -1)) {
    if (small_ % o.small_ != 0) throw InvalidInput("inexact division");
    return Int(small_ / o.small_);
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(to_big(), o.to_big(), q, r);
  if (r != 0) throw InvalidInput("inexact division");
  return normalize(q);
}

bool operator==(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: mixed representations never compare equal
}

std::strong_ordering operator<=>(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const BigInt x = a.to_big();
  const BigInt y = b.to_big();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

Int factorial(int n) {
  Int out = 1;
  for (int i = 2; i <= n; ++i) out *= Int(i);
  return out;
}

Int binomial(const Int& top, int k) {
  if (k < 0) return 0;
  Int num = 1;
  for (int i = 0; i < k; ++i) num *= top - Int(i);
  return num.divexact(factorial(k));
}

}  // namespace matqsym
