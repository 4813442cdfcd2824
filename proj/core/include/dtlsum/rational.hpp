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

#ifndef DTLSUM_RATIONAL_HPP
#define DTLSUM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dtlsum {

/// Exact rational number in lowest terms.
///
/// Values whose numerator and denominator fit in int64 are stored inline;
/// anything larger lives in an immutable, shared GMP rational. The two
/// representations never overlap, so structural equality is value equality.
class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT: integers convert implicitly
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    /// Parses "p" or "p/q" with decimal integers; throws std::invalid_argument.
    static Rational parse(std::string_view text);

    __extension__ typedef __int128 wide;

    /// Exact integer conversion, promoting to GMP when needed.
    static Rational from_wide(wide n) { return from_i128(n, 1); }
    /// The value when it is an integer stored inline.
    std::optional<std::int64_t> small_integer() const {
        if (big_ || den_ != 1) return std::nullopt;
        return num_;
    }

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    std::string to_string() const;
    double to_double() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws DivisionByZero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational inverse() const;

  private:
    static Rational from_i128(wide n, wide d);
    void assign_big(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dtlsum

#endif  // DTLSUM_RATIONAL_HPP
