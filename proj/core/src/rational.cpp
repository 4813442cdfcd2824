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

#include "dtlsum/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "dtlsum/errors.hpp"

namespace dtlsum {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

u128 gcd_u128(u128 a, u128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

mpz_class mpz_from_i128(i128 v) {
    u128 mag = abs_u128(v);
    std::uint64_t limbs[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (v < 0) z = -z;
    return z;
}

bool fits64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DivisionByZero();
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

Rational Rational::from_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd_u128(abs_u128(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    Rational r;
    if (n >= kMin64 && n <= kMax64 && d <= kMax64) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

void Rational::assign_big(mpq_class q) {
    q.canonicalize();
    if (fits64(q.get_num()) && fits64(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(std::move(q));
    }
}

Rational Rational::parse(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    auto slash = text.find('/');
    std::string_view ns = text.substr(0, slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits(ns) || !digits(ds) || ds[0] == '-') {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(ns), 10);
    mpz_class d(std::string(ds), 10);
    if (d == 0) throw DivisionByZero();
    Rational r;
    r.assign_big(mpq_class(n, d));
    return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
    if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational r;
    r.assign_big(-to_mpq());
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s)) {
                num_ = s;
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
        i128 d = static_cast<i128>(den_) * o.den_;
        return *this = from_i128(n, d);
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(num_, o.num_, &p)) {
                num_ = p;
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * o.num_;
        i128 d = static_cast<i128>(den_) * o.den_;
        return *this = from_i128(n, d);
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (!big_) return from_i128(den_, num_);
    Rational r;
    r.assign_big(1 / *big_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace dtlsum
