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

#ifndef QMF_MULTSYS_HPP
#define QMF_MULTSYS_HPP

#include <string>

#include "qmf/rational.hpp"

namespace qmf {

/// Character chi^n of SL(2,Z); the character group is cyclic of order 12
/// with chi(T) = e(1/12), chi(S) = e(-1/4). Values are tracked as exponent
/// rationals mod 1, never as complex numbers.
struct Character {
  int n = 0;  // exponent of the generator, mod 12

  explicit Character(int exponent = 0) : n(((exponent % 12) + 12) % 12) {}
  Character operator*(Character other) const { return Character(n + other.n); }
  Rational t_exponent() const { return fractional_part(Rational(n, 12)); }
};

/// Multiplier system v = v_k * chi^twist in weight class k (mod Z), with
/// v_k(T) = e(k/12), v_k(S) = e(-k/4). The value v_k(ST) appears in two
/// inconsistent forms in the source material; both exponents are carried
/// and neither feeds any downstream computation.
class MultiplierSystem {
public:
  static MultiplierSystem canonical(const Rational& weight) {
    return MultiplierSystem(weight, 0);
  }
  MultiplierSystem(const Rational& weight, int twist)
      : weight_(weight), twist_(((twist % 12) + 12) % 12) {}

  const Rational& weight() const { return weight_; }
  int twist() const { return twist_; }

  Rational t_exponent() const { return fractional_part(weight_ / 12 + Rational(twist_, 12)); }
  Rational s_exponent() const { return fractional_part(-weight_ / 4 - Rational(twist_, 4)); }
  Rational st_exponent_stated() const { return fractional_part(-weight_ / 6 - Rational(twist_, 6)); }
  Rational st_exponent_proof() const { return fractional_part(-weight_ / 3 - Rational(twist_, 6)); }

  /// The unique m in [0, 12) with v(T) = e(m/12).
  Rational cusp_parameter() const { return 12 * t_exponent(); }

  MultiplierSystem twisted_by(int n) const { return MultiplierSystem(weight_, twist_ + n); }

  /// mult(k) = mult(k') iff k = k' (mod Z).
  bool same_weight_class(const MultiplierSystem& other) const {
    return is_integer(weight_ - other.weight_);
  }

  /// v_k v_m = v_{k+m}; twists add mod 12.
  friend MultiplierSystem product(const MultiplierSystem& a, const MultiplierSystem& b) {
    return MultiplierSystem(a.weight_ + b.weight_, a.twist_ + b.twist_);
  }

private:
  Rational weight_;
  int twist_;
};

struct ScalarSpaceStructure {
  Rational cusp_parameter;     // m: the space is M * eta^{2m}
  Rational minimal_weight;     // equal to m
  std::string description;
};

/// H(v) = M * eta^{2m} with m the cusp parameter of v (dimension-one data).
ScalarSpaceStructure scalar_space_structure(const MultiplierSystem& u);

}  // namespace qmf

#endif
