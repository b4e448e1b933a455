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

#include "goas/rational.hpp"

#include <cctype>

#include "goas/error.hpp"

namespace goas {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kMultipleParents: return "MultipleParents";
    case ErrorCode::kDisconnectedVertex: return "DisconnectedVertex";
    case ErrorCode::kNegativeCost: return "NegativeCost";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNegativeBudget: return "NegativeBudget";
    case ErrorCode::kNotASubtree: return "NotASubtree";
    case ErrorCode::kNonConstantCost: return "NonConstantCost";
    case ErrorCode::kZeroCost: return "ZeroCost";
    case ErrorCode::kNonIntegerCost: return "NonIntegerCost";
    case ErrorCode::kUnknownCostValue: return "UnknownCostValue";
    case ErrorCode::kDuplicateCostValue: return "DuplicateCostValue";
    case ErrorCode::kTooManyCostValues: return "TooManyCostValues";
    case ErrorCode::kTableTooLarge: return "TableTooLarge";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotWellFormed: return "NotWellFormed";
    case ErrorCode::kNotNested: return "NotNested";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> ParseRational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) return std::nullopt;

  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) return std::nullopt;
    BigInt d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    result = Rational(BigInt(std::string(num), 10), d);
    result.canonicalize();
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !AllDigits(whole)) return std::nullopt;
    if (!frac.empty() && !AllDigits(frac)) return std::nullopt;
    const std::string digits = std::string(whole) + std::string(frac);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    result = Rational(num, den);
    result.canonicalize();
  } else {
    if (!AllDigits(body)) return std::nullopt;
    result = Rational(BigInt(std::string(body), 10));
  }
  if (negative) result = -result;
  return result;
}

std::string FormatRational(const Rational& value) {
  const Rational q = Canonical(value);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt Floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt Ceil(const Rational& value) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

std::int64_t FloorLog2(const Rational& value) {
  // floor(lg x) == floor(lg floor(x)) for x >= 1.
  const BigInt whole = Floor(value);
  return static_cast<std::int64_t>(mpz_sizeinbase(whole.get_mpz_t(), 2)) - 1;
}

BigInt Lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

bool ToInt64(const BigInt& value, std::int64_t* out) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!mpz_fits_slong_p(value.get_mpz_t())) return false;
  *out = mpz_get_si(value.get_mpz_t());
  return true;
}

}  // namespace goas
