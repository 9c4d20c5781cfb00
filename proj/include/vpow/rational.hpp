/*
 * Copyright 2026 The vpow Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef VPOW_RATIONAL_HPP
#define VPOW_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace vpow {

/// Exact probability / weight value used on every enumeration path.
using Rational = mpq_class;

/// Parses "3", "-2", "7/10", "0.7", "2.5e-3" into an exact rational.
/// Decimal text is converted digit by digit, so "0.1" is exactly 1/10.
/// Throws ValidationError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers render without the "/1".
std::string to_fraction_string(const Rational& value);

/// Fixed-point rendering rounded half away from zero.
std::string to_decimal_string(const Rational& value, int places = 12);

double to_double(const Rational& value);

Rational factorial(std::uint64_t n);

}  // namespace vpow

#endif  // VPOW_RATIONAL_HPP
