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

#include "dtlsum/verify.hpp"

using namespace dtlsum;

namespace {

LaurentPoly P(const VarSetPtr& vs, std::string_view text) { return parse_text(text, vs); }

LaurentPoly e1e2(const VarSetPtr& vs) { return elem_E(vs, 1) * elem_E(vs, 2); }

VerificationReport quiet_verify(IdentityId id, int L, const VerifyMode& mode, const VerifyOptions& opts = {}) {
    set_log_sink(nullptr);
    return verify(id, L, mode, opts);
}

}  // namespace

TEST_CASE("periodic sum rule, small sizes") {
    auto r1 = zp_compute(VarSet::numbered(1), Method::DET_E);
    CHECK(r1.value == LaurentPoly::constant(VarSet::numbered(1), 1));

    auto v3 = VarSet::numbered(3);
    auto r3 = zp_compute(v3, Method::DET_E);
    CHECK(r3.value == e1e2(v3));
    CHECK(r3.normalization == Cyclo(1));

    auto v2 = VarSet::numbered(2);
    auto mu2 = zp_compute(v2, Method::DET_MU);
    CHECK(mu2.value == P(v2, "z1 + z2"));
    CHECK(mu2.normalization == Cyclo(1));

    for (int L = 2; L <= 5; ++L) {
        auto vs = VarSet::numbered(L);
        CHECK(zp_compute(vs, Method::DET_MU).value == zp_compute(vs, Method::DET_E).value);
    }
    CHECK_THROWS_AS(zp_compute(v2, Method::DET_LAMBDA), std::invalid_argument);
    CHECK_THROWS_AS(zp_compute(VarSet::numbered(0), Method::DET_E), SizeRuleError);
}

TEST_CASE("periodic value at (z1, t, -t)") {
    auto vs = VarSet::make({"z1", "t"});
    PolyRing ring(vs);
    auto z1 = ring.gen(0), t = ring.gen(1);
    std::vector<LaurentPoly> args{z1, t, -t};
    auto z = zp_value(ring, Method::DET_E, Args<PolyRing>(args));
    CHECK(z == P(vs, "-1*z1*t^2"));
    std::vector<LaurentPoly> one{z1};
    CHECK(z == Pp_gen(VarSet::numbered(1), "t").rebase(vs) * zp_value(ring, Method::DET_E, Args<PolyRing>(one)));
}

TEST_CASE("open sum rule, small sizes") {
    auto v2 = VarSet::numbered(2);
    PolyRing r2(v2);
    auto g2 = r2.generators();
    Args<PolyRing> a2(g2);
    CHECK(v_value(r2, a2) == eps(v2, 1));
    CHECK(Pp_fixed(v2) == eps(v2, 1));
    CHECK(w_value(r2, a2) == eps(v2, 2));
    for (Method m : {Method::V_OVER_PP, Method::DET_NU, Method::DET_LAMBDA}) {
        auto r = z_open_compute(v2, m);
        CHECK(r.value == LaurentPoly::constant(v2, 1));
        CHECK(r.normalization == Cyclo(1));
    }
    CHECK(z_open_compute(VarSet::numbered(1), Method::DET_LAMBDA).value ==
          LaurentPoly::constant(VarSet::numbered(1), 1));
}

TEST_CASE("open routes agree at L = 3, 4") {
    for (int L = 3; L <= 4; ++L) {
        auto vs = VarSet::numbered(L);
        auto ref = z_open_compute(vs, Method::DET_LAMBDA).value;
        for (Method m : {Method::V_OVER_PP, Method::DET_NU}) {
            auto r = z_open_compute(vs, m);
            CHECK(r.value == ref);
            CHECK(r.normalization == Cyclo(1));
        }
    }
    CHECK(z_open_compute(VarSet::numbered(3), Method::DET_LAMBDA).value == eps(VarSet::numbered(3), 1));
}

TEST_CASE("w-over-p route does not reproduce the open sum rule") {
    CHECK_THROWS_AS(z_open_compute(VarSet::numbered(2), Method::W_OVER_P), DivisibilityFailure);
    CHECK_THROWS_AS(z_open_compute(VarSet::numbered(3), Method::W_OVER_P), MethodMismatch);
    try {
        z_open_compute(VarSet::numbered(3), Method::W_OVER_P);
    } catch (const MethodMismatch& e) {
        CHECK(e.witness().has_value());
    }
}

TEST_CASE("invariant assertions") {
    auto v2 = VarSet::numbered(2);
    CHECK_THROWS_AS(assert_invariants(P(v2, "z1"), false, "probe"), InvariantViolation);
    CHECK_THROWS_AS(assert_invariants(P(v2, "z1 + z2"), true, "probe"), InvariantViolation);
    CHECK_NOTHROW(assert_invariants(P(v2, "z1 + z2"), false, "probe"));
    CHECK_NOTHROW(assert_invariants(eps(v2, 1), true, "probe"));
}

TEST_CASE("interpolation oracle") {
    set_log_sink(nullptr);
    auto p2 = oracle_interpolate(Model::PERIODIC, 2);
    CHECK(compare(P(VarSet::numbered(2), "z1 + z2"), p2.value).kind != CompareResult::Kind::Distinct);

    auto p3 = oracle_interpolate(Model::PERIODIC, 3);
    CHECK(compare(e1e2(VarSet::numbered(3)), p3.value).kind != CompareResult::Kind::Distinct);
    CHECK(p3.normalization == Cyclo(1));

    auto o0 = oracle_interpolate(Model::OPEN, 0);
    CHECK(o0.value == LaurentPoly::constant(VarSet::numbered(0), 1));

    for (int L = 1; L <= 4; ++L) {
        auto o = oracle_interpolate(Model::OPEN, L);
        CHECK(o.value == z_open_compute(VarSet::numbered(L), Method::DET_LAMBDA).value);
    }
    CHECK_THROWS_AS(oracle_interpolate(Model::PERIODIC, 0), SizeRuleError);
}

TEST_CASE("verify examples") {
    auto rec2p = quiet_verify(IdentityId::REC2P, 3, VerifyMode::symbolic());
    CHECK(rec2p.verdict == Verdict::EXACT);
    CHECK(quiet_verify(IdentityId::MUREC, 5, VerifyMode::symbolic()).verdict == Verdict::EXACT);
    auto sym = quiet_verify(IdentityId::SYMMETRY, 4, VerifyMode::random(100, 11));
    CHECK(sym.verdict == Verdict::EXACT);
    CHECK(sym.constant == Cyclo(1));
    CHECK_FALSE(sym.witness.has_value());
}

TEST_CASE("every identity holds at its smallest symbolic sizes") {
    // known exceptions are pinned in their own cases
    for (IdentityId id : all_identities()) {
        if (id == IdentityId::CROSS_OPEN) continue;
        for (int L = std::max(min_size(id), 2); L <= 4; ++L) {
            if (id == IdentityId::REC2_OPEN && L == 2) continue;
            if (id == IdentityId::WREC && L == 2) continue;
            auto r = quiet_verify(id, L, VerifyMode::symbolic(3));
            INFO(to_string(id), " L=", L, " ", r.details.dump());
            CHECK(r.verdict == Verdict::EXACT);
        }
    }
}

TEST_CASE("pinned non-exact outcomes") {
    auto rec2 = quiet_verify(IdentityId::REC2_OPEN, 2, VerifyMode::symbolic(3));
    CHECK(rec2.verdict == Verdict::FAIL);
    CHECK(rec2.witness.has_value());
    CHECK(quiet_verify(IdentityId::REC2_OPEN, 3, VerifyMode::symbolic(3)).verdict == Verdict::EXACT);

    auto zt1 = quiet_verify(IdentityId::ZTILDE_VW, 1, VerifyMode::symbolic());
    CHECK(zt1.verdict == Verdict::PROPORTIONAL);
    CHECK(zt1.constant == Cyclo(Rational(1, 2)));
    auto zt3 = quiet_verify(IdentityId::ZTILDE_VW, 3, VerifyMode::symbolic());
    CHECK(zt3.verdict == Verdict::EXACT);
    CHECK(zt3.details.at("centro_residue").get<int>() > 0);

    auto w2 = quiet_verify(IdentityId::WREC, 2, VerifyMode::symbolic());
    CHECK(w2.verdict == Verdict::PROPORTIONAL);
    CHECK(w2.constant == Cyclo(Rational(1, 2)));
    auto w2r = quiet_verify(IdentityId::WREC, 2, VerifyMode::random(8, 4));
    CHECK(w2r.verdict == Verdict::PROPORTIONAL);
    CHECK(w2r.constant == Cyclo(Rational(1, 2)));

    for (int L = 1; L <= 4; ++L) {
        auto c = quiet_verify(IdentityId::CROSS_OPEN, L, VerifyMode::symbolic(3));
        CHECK(c.verdict == Verdict::FAIL);
        CHECK(c.witness.has_value());
        for (const auto& ch : c.details.at("checks")) {
            CHECK(ch.at("label").get<std::string>().find("w-over-p") != std::string::npos);
        }
    }
}

TEST_CASE("random mode catches a planted corruption") {
    VerifyOptions bad;
    bad.corrupt = true;
    auto r = quiet_verify(IdentityId::REC1P, 4, VerifyMode::random(5, 20261017), bad);
    CHECK(r.verdict == Verdict::FAIL);
    REQUIRE(r.witness.has_value());
    auto again = quiet_verify(IdentityId::REC1P, 4, VerifyMode::random(5, 20261017), bad);
    CHECK(again.witness->to_string() == r.witness->to_string());
    CHECK(quiet_verify(IdentityId::REC1P, 4, VerifyMode::symbolic(), bad).verdict == Verdict::FAIL);
    CHECK(quiet_verify(IdentityId::REC1P, 4, VerifyMode::random(5, 20261017)).verdict == Verdict::EXACT);
}

TEST_CASE("size rules") {
    CHECK_THROWS_AS(verify(IdentityId::REC2P, 2, VerifyMode::symbolic()), SizeRuleError);
    CHECK_THROWS_AS(verify(IdentityId::MU_REDUCTION, 7, VerifyMode::symbolic()), SizeRuleError);
    CHECK_THROWS_AS(verify(IdentityId::RECZ, 6, VerifyMode::symbolic()), SizeRuleError);
    VerifyOptions up;
    up.ceiling = 7;
    CHECK(quiet_verify(IdentityId::MU_REDUCTION, 7, VerifyMode::symbolic(), up).verdict == Verdict::EXACT);
    CHECK(quiet_verify(IdentityId::MU_REDUCTION, 7, VerifyMode::random(3, 1)).verdict == Verdict::EXACT);
    CHECK(symbolic_ceiling(IdentityId::REC1P) == 6);
    CHECK(symbolic_ceiling(IdentityId::RECZ) == 5);
    CHECK_THROWS_AS(verify(IdentityId::REC1P, 3, VerifyMode::random(0, 1)), std::invalid_argument);
}

TEST_CASE("names and suites") {
    for (IdentityId id : all_identities()) CHECK(parse_identity(to_string(id)) == id);
    CHECK_FALSE(parse_identity("nope").has_value());
    CHECK(parse_identity("rec2-open") == IdentityId::REC2_OPEN);
    auto periodic = suite_identities(Suite::PERIODIC);
    auto open = suite_identities(Suite::OPEN);
    CHECK(periodic.size() + open.size() + 2 == all_identities().size());
    CHECK(std::find(periodic.begin(), periodic.end(), IdentityId::MUREC) != periodic.end());
    CHECK(std::find(open.begin(), open.end(), IdentityId::RECZ) != open.end());
    CHECK(suite_identities(Suite::ALL).size() == all_identities().size());
    for (Method m : {Method::DET_E, Method::DET_MU, Method::V_OVER_PP, Method::W_OVER_P, Method::DET_NU,
                     Method::DET_LAMBDA, Method::ORACLE_INTERP})
        CHECK(parse_method(to_string(m)) == m);
    CHECK(parse_model("open") == Model::OPEN);
}

TEST_CASE("suite runs are independent of the thread count") {
    set_log_sink(nullptr);
    std::vector<VerifyTask> tasks;
    for (IdentityId id : suite_identities(Suite::ALL)) {
        for (int L = min_size(id); L <= 3; ++L) tasks.push_back({id, L});
    }
    VerifyOptions bad;
    bad.corrupt = true;
    for (const auto& mode : {VerifyMode::symbolic(9), VerifyMode::random(6, 9)}) {
        auto one = run_suite(tasks, mode, bad, 1);
        auto four = run_suite(tasks, mode, bad, 4);
        REQUIRE(one.size() == tasks.size());
        REQUIRE(four.size() == tasks.size());
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            CHECK(one[i].id == tasks[i].id);
            CHECK(one[i].L == tasks[i].L);
            CHECK(to_json(one[i]).dump() == to_json(four[i]).dump());
        }
    }
}

TEST_CASE("report json") {
    auto r = quiet_verify(IdentityId::REC1P, 3, VerifyMode::random(4, 42));
    auto j = to_json(r);
    for (const char* k : {"id", "L", "mode", "seed", "verdict", "constant", "witness", "millis"}) CHECK(j.contains(k));
    CHECK(j["id"] == "rec1p");
    CHECK(j["L"] == 3);
    CHECK(j["mode"] == "random");
    CHECK(j["trials"] == 4);
    CHECK(j["seed"] == 42);
    CHECK(j["verdict"] == "EXACT");
    CHECK(j["witness"].is_null());
    CHECK(j["millis"].is_null());
    CHECK(to_json(r, true)["millis"].is_number());
    auto s = to_json(quiet_verify(IdentityId::REC1P, 3, VerifyMode::symbolic(5)));
    CHECK_FALSE(s.contains("trials"));
    CHECK(s["mode"] == "symbolic");
}
