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

#include "test_support.hpp"

#include "dtlsum/cyclo.hpp"
#include "dtlsum/errors.hpp"
#include "dtlsum/sampling.hpp"
#include "dtlsum/serialize.hpp"

using namespace dtlsum;

namespace {
const Cyclo w = Cyclo::omega();
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rational overflow promotes to gmp and back") {
    Rational big(INT64_MAX);
    Rational sq = big * big;
    CHECK(sq.to_string() == "85070591730234615847396907784232501249");
    CHECK(sq / big == big);
    CHECK((sq - sq).is_zero());
    Rational tiny(1, INT64_MAX);
    CHECK((tiny * tiny * sq).is_one());
    CHECK(Rational(INT64_MIN) * Rational(-1) > Rational(INT64_MAX));
}

TEST_CASE("omega arithmetic") {
    CHECK(w * w == Cyclo(-1, 1));
    CHECK(w * w * w == Cyclo(-1));
    CHECK(w.inverse() == Cyclo(1, -1));
    CHECK(omega_pow(0) == Cyclo(1));
    CHECK(omega_pow(-1) == Cyclo(1, -1));
    CHECK(omega_pow(6) == Cyclo(1));
    for (long k = -13; k <= 13; ++k) CHECK(omega_pow(k + 1) == omega_pow(k) * w);
    Cyclo d = w - w.inverse();
    CHECK(d * d == Cyclo(-3));
    CHECK(w + w.inverse() == Cyclo(1));
    CHECK(w.norm() == Rational(1));
}

TEST_CASE("division by zero is an error value") {
    CHECK_FALSE(cyc_arith(w, Cyclo(0), ArithOp::Div).has_value());
    CHECK(*cyc_arith(Cyclo(1), w, ArithOp::Div) == Cyclo(1, -1));
    CHECK_THROWS_AS(Cyclo(0).inverse(), DivisionByZero);
}

TEST_CASE("field axioms on random samples") {
    Sampler s(20260101);
    for (int i = 0; i < 1000; ++i) {
        Cyclo x = s.cyclo(), y = s.cyclo(), z = s.cyclo();
        CHECK((x * y) * z == x * (y * z));
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == Cyclo(1));
        CHECK(x.conj().conj() == x);
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("text and json round trip") {
    Sampler s(7);
    for (int i = 0; i < 200; ++i) {
        Cyclo x = s.cyclo();
        CHECK(Cyclo::parse(x.to_string()) == x);
        CHECK(cyclo_from_json(to_json(x)) == x);
    }
    Cyclo big(Rational::parse("123456789012345678901234567891/11"), Rational(-1, 3));
    auto j = to_json(big);
    CHECK(j.dump() == R"({"a":"123456789012345678901234567891/11","b":"-1/3"})");
    CHECK(cyclo_from_json(json::parse(j.dump())) == big);
    CHECK(Cyclo(1, -1).to_string() == "(1 - 1w)");
    CHECK(Cyclo(0, -2).to_string() == "-2w");
}
