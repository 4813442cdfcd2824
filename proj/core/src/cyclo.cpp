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

#include "dtlsum/cyclo.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dtlsum/errors.hpp"

namespace dtlsum {

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    // (a + bw)(c + dw) = ac - bd + (ad + bc + bd)w
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ - bd;
    Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

std::optional<Cyclo> Cyclo::try_inverse() const {
    if (is_zero()) return std::nullopt;
    if (b_.is_zero()) return Cyclo(a_.inverse());
    Rational n = norm().inverse();
    Cyclo c = conj();
    return Cyclo(c.a_ * n, c.b_ * n);
}

Cyclo Cyclo::inverse() const {
    auto inv = try_inverse();
    if (!inv) throw DivisionByZero();
    return *inv;
}

std::optional<Cyclo> cyc_arith(const Cyclo& x, const Cyclo& y, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div: {
            auto inv = y.try_inverse();
            if (!inv) return std::nullopt;
            return x * *inv;
        }
    }
    return std::nullopt;
}

Cyclo omega_pow(long k) {
    // w^0..w^5 = 1, w, w - 1, -1, -w, 1 - w
    switch (((k % 6) + 6) % 6) {
        case 0: return Cyclo(1, 0);
        case 1: return Cyclo(0, 1);
        case 2: return Cyclo(-1, 1);
        case 3: return Cyclo(-1, 0);
        case 4: return Cyclo(0, -1);
        default: return Cyclo(1, -1);
    }
}

std::string Cyclo::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    Rational babs = b_.sign() < 0 ? -b_ : b_;
    if (a_.is_zero()) return b_.to_string() + "w";
    return "(" + a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + babs.to_string() + "w)";
}

Cyclo Cyclo::parse(std::string_view s) {
    auto fail = [&] { return std::invalid_argument("not a cyclotomic number: '" + std::string(s) + "'"); };
    if (s.empty()) throw fail();
    if (s.front() == '(') {
        if (s.back() != ')') throw fail();
        std::string_view in = s.substr(1, s.size() - 2);
        auto pos = in.find(" + ");
        int sign = 1;
        if (pos == std::string_view::npos) {
            pos = in.find(" - ");
            sign = -1;
        }
        if (pos == std::string_view::npos) throw fail();
        std::string_view bs = in.substr(pos + 3);
        if (bs.empty() || bs.back() != 'w') throw fail();
        Rational b = Rational::parse(bs.substr(0, bs.size() - 1));
        return Cyclo(Rational::parse(in.substr(0, pos)), sign < 0 ? -b : b);
    }
    if (s.back() == 'w') return Cyclo(Rational(0), Rational::parse(s.substr(0, s.size() - 1)));
    return Cyclo(Rational::parse(s));
}

std::string Cyclo::to_complex_string(int precision) const {
    // w = 1/2 + i sqrt(3)/2
    double re = a_.to_double() + 0.5 * b_.to_double();
    double im = b_.to_double() * std::sqrt(3.0) / 2.0;
    std::ostringstream os;
    os << std::setprecision(precision) << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.to_string(); }

}  // namespace dtlsum
