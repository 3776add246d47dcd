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

#ifndef QMF_RATIONAL_HPP
#define QMF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "qmf/errors.hpp"

namespace qmf {

// All coefficient arithmetic runs on GMP rationals; values stay reduced
// with positive denominator, which is also the serialization contract.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal digits). Throws InvalidArgument on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced form, "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Rational& value);

std::string to_string(const Integer& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// floor(value) as an Integer (works for negative values).
Integer floor_integer(const Rational& value);

/// value - floor(value), in [0, 1).
Rational fractional_part(const Rational& value);

/// floor(num/den) for integers, den > 0.
long floor_div_long(long num, long den);

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binomial(unsigned n, unsigned k);

/// value^e for integer e (e < 0 requires value != 0).
Rational pow_rational_int(const Rational& value, long e);

std::vector<Rational> parse_rational_csv(std::string_view csv);

}  // namespace qmf

#endif
