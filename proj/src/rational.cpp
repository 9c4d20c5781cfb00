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

#include "vpow/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "vpow/errors.hpp"

namespace vpow {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw ValidationError("malformed number '" + std::string(text) + "'");
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) bad_number(whole);
  mpz_class z(std::string(text), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_number(whole);

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) bad_number(whole);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(whole) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    std::string_view digits = exp_text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits) || digits.size() > 6) bad_number(whole);
    exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
    text = text.substr(0, e);
  }
  std::string mantissa;
  long fraction_digits = 0;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(whole);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
      bad_number(whole);
    }
    mantissa = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) bad_number(whole);
    mantissa = std::string(text);
  }
  mpz_class num(mantissa, 10);
  if (negative) num = -num;
  const long shift = exponent - fraction_digits;
  Rational r;
  if (shift >= 0) {
    r = Rational(num * pow10(static_cast<unsigned long>(shift)));
  } else {
    r = Rational(num, pow10(static_cast<unsigned long>(-shift)));
    r.canonicalize();
  }
  return r;
}

std::string to_fraction_string(const Rational& value) { return value.get_str(10); }

std::string to_decimal_string(const Rational& value, int places) {
  const mpz_class scale = pow10(static_cast<unsigned long>(places));
  mpz_class num = abs(value.get_num()) * scale;
  const mpz_class& den = value.get_den();
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) ++q;
  std::string digits = q.get_str(10);
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (sgn(value) < 0 && q != 0) digits.insert(0, "-");
  return digits;
}

double to_double(const Rational& value) { return value.get_d(); }

Rational factorial(std::uint64_t n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(z);
}

}  // namespace vpow
