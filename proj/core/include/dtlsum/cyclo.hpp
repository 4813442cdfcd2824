/*
   Copyright 2026 The dtlsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DTLSUM_CYCLO_HPP
#define DTLSUM_CYCLO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "dtlsum/rational.hpp"

namespace dtlsum {

/// Element a + b*w of Q(w), w a primitive sixth root of unity.
///
/// The basis is {1, w} with the reduction w^2 = w - 1, so w^3 = -1 and the
/// representation is unique.
class Cyclo {
  public:
    Cyclo() = default;
    Cyclo(Rational a) : a_(std::move(a)) {}  // NOLINT
    Cyclo(std::int64_t a) : a_(a) {}         // NOLINT
    Cyclo(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Cyclo omega() { return Cyclo(0, 1); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Galois conjugate, w -> w^-1 = 1 - w.
    Cyclo conj() const { return Cyclo(a_ + b_, -b_); }
    /// Field norm a^2 + ab + b^2.
    Rational norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

    /// Throws DivisionByZero.
    Cyclo inverse() const;
    std::optional<Cyclo> try_inverse() const;

    Cyclo operator-() const { return Cyclo(-a_, -b_); }
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

    friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
    friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
    friend Cyclo operator*(Cyclo x, const Cyclo& y) { return x *= y; }
    friend Cyclo operator/(Cyclo x, const Cyclo& y) { return x /= y; }
    friend bool operator==(const Cyclo& x, const Cyclo& y) = default;

    /// Display form: "3", "-2w", "(1 - 1w)".
    std::string to_string() const;
    static Cyclo parse(std::string_view text);

    /// Numeric rendering for display only; nothing in the core uses it.
    std::string to_complex_string(int precision = 6) const;

  private:
    Rational a_;
    Rational b_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Field operation that reports division by zero as an empty result.
std::optional<Cyclo> cyc_arith(const Cyclo& x, const Cyclo& y, ArithOp op);

/// w^k, any integer k (period 6).
Cyclo omega_pow(long k);

std::ostream& operator<<(std::ostream& os, const Cyclo& c);

}  // namespace dtlsum

#endif  // DTLSUM_CYCLO_HPP
