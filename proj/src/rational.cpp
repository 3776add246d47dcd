// Copyright 2026 the qmf authors
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

#include "qmf/rational.hpp"

#include <cctype>

namespace qmf {

namespace {

bool digits_only(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!digits_only(num) || !digits_only(den))
    fail(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'");
  Rational r{Integer(std::string(num)), Integer(std::string(den))};
  if (r.get_den() == 0)
    fail(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer floor_integer(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Rational fractional_part(const Rational& value) {
  Rational r = value - Rational(floor_integer(value));
  r.canonicalize();
  return r;
}

long floor_div_long(long num, long den) {
  long q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational pow_rational_int(const Rational& value, long e) {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long mag = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && value == 0) fail(ErrorCode::InvalidArgument, "0 raised to a negative power");
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), value.get_den().get_mpz_t(), mag);
  Rational r = invert ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_csv(std::string_view csv) {
  std::vector<Rational> out;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t comma = csv.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? csv.substr(start) : csv.substr(start, comma - start);
    if (piece.empty())
      fail(ErrorCode::InvalidArgument, "empty entry in rational list '" + std::string(csv) + "'");
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace qmf
