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

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace matqsym {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer: an int64 fast path with checked overflow that escalates to
// an arbitrary-precision value. Values that fit in int64 are always stored
// in the small form, so equality and hashing never see two encodings.
class Int {
 public:
  Int() = default;
  Int(std::int64_t v) : small_(v) {}  // NOLINT: implicit by design of the numeric type
  Int(int v) : small_(v) {}           // NOLINT
  explicit Int(const BigInt& v);

  static Int parse(std::string_view text);

  bool is_small() const { return !big_; }
  bool is_zero() const { return !big_ && small_ == 0; }
  int sign() const;
  std::int64_t to_int64() const;  // throws std::overflow_error if out of range
  BigInt to_big() const;
  std::string str() const;

  Int operator-() const;
  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);
  // Exact division; throws InvalidInput if o does not divide *this.
  Int divexact(const Int& o) const;

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  friend bool operator==(const Int& a, const Int& b);
  friend std::strong_ordering operator<=>(const Int& a, const Int& b);

 private:
  static Int normalize(BigInt v);

  std::int64_t small_ = 0;
  std::shared_ptr<const BigInt> big_;
};

std::ostream& operator<<(std::ostream& os, const Int& v);

Int factorial(int n);
// Binomial coefficient for integer (possibly negative) top and k >= 0.
Int binomial(const Int& top, int k);

}  // namespace matqsym
