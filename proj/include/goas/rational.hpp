// Copyright 2026 The GOAS Solver Authors
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

#ifndef GOAS_RATIONAL_HPP_
#define GOAS_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace goas {

// Exact arithmetic everywhere in the core. Stored values are canonical
// (gcd(num, den) == 1, den > 0).
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "12", "-3", "0.125", "-.5", "7/3", "-7/3". Decimals are read as
// exact fractions, so "0.1" is 1/10. Returns nullopt on malformed input or a
// zero denominator.
std::optional<Rational> ParseRational(std::string_view text);

// Copy in lowest terms with a positive denominator.
inline Rational Canonical(Rational q) {
  q.canonicalize();
  return q;
}

// Canonical text form: "a" for integers, "a/b" otherwise.
std::string FormatRational(const Rational& value);

inline bool IsInteger(const Rational& value) {
  return value.get_den() == 1;
}

BigInt Floor(const Rational& value);
BigInt Ceil(const Rational& value);

// floor(log2(value)) for value >= 1.
std::int64_t FloorLog2(const Rational& value);

BigInt Lcm(const BigInt& a, const BigInt& b);

// True iff value fits in an int64_t; stores it in *out.
bool ToInt64(const BigInt& value, std::int64_t* out);

}  // namespace goas

#endif  // GOAS_RATIONAL_HPP_
