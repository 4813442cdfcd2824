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

// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria (0 when all pass).

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dtlsum/log.hpp"
#include "dtlsum/verify.hpp"

using namespace dtlsum;

namespace {

// pinned limits, seconds
constexpr double kLimit1 = 1, kLimit2 = 120, kLimit3 = 60, kLimit4 = 120, kLimit5 = 120, kLimit6 = 300,
                 kLimit7 = 300, kLimit8 = 300, kLimit9 = 300, kLimit10 = 300, kLimit11 = 60, kLimit12 = 60;
constexpr std::uint64_t kSeed = 20261017;
constexpr int kSymmetryTrials = 200;
constexpr int kCorruptTrials = 5;

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) ok = false;
        notes.push_back(std::string(cond ? "ok   " : "BAD  ") + what);
    }
};

std::string describe(const VerificationReport& r) {
    std::ostringstream os;
    os << to_string(r.id) << " L=" << r.L << " " << to_string(r.verdict);
    if (r.verdict == Verdict::PROPORTIONAL) os << " c=" << r.constant.to_string();
    if (r.verdict == Verdict::FAIL) {
        if (r.details.contains("failed_check")) os << " check=" << r.details["failed_check"].get<std::string>();
        if (r.witness) os << " witness=" << r.witness->to_string();
    }
    return os.str();
}

bool holds(const VerificationReport& r) { return r.verdict == Verdict::EXACT || r.verdict == Verdict::PROPORTIONAL; }

void expect_exact(Outcome& o, IdentityId id, int L, const VerifyMode& mode) {
    auto r = verify(id, L, mode);
    o.require(r.verdict == Verdict::EXACT, describe(r));
}

void expect_holds(Outcome& o, IdentityId id, int L, const VerifyMode& mode) {
    auto r = verify(id, L, mode);
    o.require(holds(r), describe(r));
}

LaurentPoly e1e2(const VarSetPtr& vs) { return elem_E(vs, 1) * elem_E(vs, 2); }

// ---- criteria ----------------------------------------------------------------

Outcome periodic_base() {
    Outcome o;
    auto v1 = VarSet::numbered(1), v3 = VarSet::numbered(3);
    o.require(zp_compute(v1, Method::DET_E).value == LaurentPoly::constant(v1, 1), "Z^p_1 = 1");
    o.require(zp_compute(v3, Method::DET_E).value == e1e2(v3), "Z^p_3 = E1 E2");
    return o;
}

Outcome periodic_cross() {
    Outcome o;
    for (int L = 2; L <= 6; ++L) {
        auto r = zp_compute(VarSet::numbered(L), Method::DET_MU);
        o.require(true, "det-mu / det-e at L=" + std::to_string(L) + ": constant " + r.normalization.to_string());
        expect_holds(o, IdentityId::CROSS_PERIODIC, L, VerifyMode::symbolic(kSeed));
    }
    return o;
}

Outcome first_periodic_recurrence() {
    Outcome o;
    for (int L = 2; L <= 5; ++L) expect_exact(o, IdentityId::REC1P, L, VerifyMode::symbolic(kSeed));
    // desk instance: the pair (zeta w, zeta/w) collapses to F^p(z1, zeta | zeta) Z^p_2
    auto vs = VarSet::make({"z1", "zeta"});
    PolyRing ring(vs);
    auto z1 = ring.gen(0), zeta = ring.gen(1);
    std::vector<LaurentPoly> full{z1, zeta * Cyclo::omega(), zeta * omega_pow(-1)};
    std::vector<LaurentPoly> shorter{z1, zeta};
    auto lhs = zp_value(ring, Method::DET_E, Args<PolyRing>(full));
    auto desk = zeta * (z1 + zeta) * (z1 + zeta);
    o.require(lhs == desk, "Z^p_3(z1, zeta w, zeta/w) = zeta (z1 + zeta)^2");
    auto z2 = zp_value(ring, Method::DET_E, Args<PolyRing>(shorter));
    o.require(z2 == z1 + zeta, "Z^p_2(z1, zeta) = z1 + zeta");
    o.require(F_periodic(ring, Args<PolyRing>(shorter), 1) * z2 == desk, "F^p(z1, zeta | zeta) Z^p_2 = zeta (z1 + zeta)^2");
    return o;
}

Outcome second_periodic_recurrence() {
    Outcome o;
    for (int L = 3; L <= 6; ++L) expect_exact(o, IdentityId::REC2P, L, VerifyMode::symbolic(kSeed));
    auto vs = VarSet::make({"z1", "t"});
    PolyRing ring(vs);
    auto z1 = ring.gen(0), t = ring.gen(1);
    std::vector<LaurentPoly> args{z1, t, -t};
    std::vector<LaurentPoly> one{z1};
    auto z = zp_value(ring, Method::DET_E, Args<PolyRing>(args));
    o.require(z == -(z1 * t * t), "Z^p_3(z1, t, -t) = -z1 t^2");
    auto pp = Pp_gen(ring, Args<PolyRing>(one), t) * zp_value(ring, Method::DET_E, Args<PolyRing>(one));
    o.require(z == pp, "Z^p_3(z1, t, -t) = P^p_1(z1 | t) Z^p_1");
    return o;
}

Outcome mu_machinery() {
    Outcome o;
    const auto m = VerifyMode::symbolic(kSeed);
    for (int L = 1; L <= 5; ++L) expect_exact(o, IdentityId::GENMU, L, m);
    for (int L = 2; L <= 6; ++L) expect_exact(o, IdentityId::MUREC, L, m);
    for (int L = 2; L <= 5; ++L) expect_exact(o, IdentityId::RECP, L, m);
    for (int L : {4, 6}) expect_exact(o, IdentityId::MU_REDUCTION, L, m);
    return o;
}

template <class F>
bool divides(F&& f) {
    try {
        f();
        return true;
    } catch (const DivisibilityFailure&) {
        return false;
    }
}

Outcome open_cross() {
    Outcome o;
    for (int L = 2; L <= 4; ++L) {
        auto r = verify(IdentityId::CROSS_OPEN, L, VerifyMode::symbolic(kSeed));
        o.require(holds(r), describe(r));
        if (!r.details.contains("checks")) continue;
        for (const auto& c : r.details["checks"]) {
            std::string line = c["label"].get<std::string>() + " " + c["verdict"].get<std::string>();
            if (c.contains("constant")) line += " c=" + c["constant"].dump();
            if (c.contains("error")) line += " (" + c["error"].get<std::string>() + ")";
            o.notes.push_back("       " + line);
        }
    }
    {
        auto r = z_open_compute(VarSet::numbered(5), Method::DET_LAMBDA);
        o.require(true, "det-lambda L=5: " + std::to_string(r.value.size()) + " terms");
        auto v = z_open_compute(VarSet::numbered(5), Method::V_OVER_PP);
        o.require(true, "v-over-pp / det-lambda at L=5: constant " + v.normalization.to_string());
    }
    for (int L = 2; L <= 4; ++L) {
        PolyRing ring(VarSet::numbered(L));
        auto g = ring.generators();
        Args<PolyRing> a(g);
        const auto n = std::to_string(L);
        o.require(divides([&] { exact_divide(v_value(ring, a), Pp_fixed(ring, a)); }),
                  "V_" + n + " / P^p_" + n + ": zero remainder");
        o.require(divides([&] { exact_divide(w_value(ring, a), P_open_fixed(ring, a)); }),
                  "W_" + n + " / P_" + n + "(w): zero remainder");
    }
    return o;
}

Outcome open_recurrences() {
    Outcome o;
    for (int L = 2; L <= 4; ++L) expect_holds(o, IdentityId::RECZ, L, VerifyMode::symbolic(kSeed));
    for (int L = 2; L <= 5; ++L) {
        auto r = verify(IdentityId::REC2_OPEN, L, VerifyMode::symbolic(kSeed));
        if (holds(r)) {
            o.require(true, describe(r));
            continue;
        }
        // a failure must be reproducible from the seed
        auto again = verify(IdentityId::REC2_OPEN, L, VerifyMode::symbolic(kSeed));
        bool same = r.witness && again.witness && again.verdict == Verdict::FAIL &&
                    r.witness->to_string() == again.witness->to_string();
        o.require(same, describe(r) + " (reported finding; reproduced from seed " + std::to_string(kSeed) + ")");
    }
    return o;
}

Outcome oracle_anchoring() {
    Outcome o;
    for (int L = 1; L <= 5; ++L) {
        auto r = oracle_interpolate(Model::PERIODIC, L);
        o.require(true, "periodic L=" + std::to_string(L) + ": oracle = " + r.normalization.to_string() + " * det-e");
    }
    for (int L = 1; L <= 4; ++L) {
        auto r = oracle_interpolate(Model::OPEN, L);
        o.require(true, "open L=" + std::to_string(L) + ": oracle = " + r.normalization.to_string() + " * det-lambda");
    }
    return o;
}

Outcome block_factorization() {
    Outcome o;
    for (int L = 2; L <= 5; ++L) {
        auto r = verify(IdentityId::ZTILDE_VW, L, VerifyMode::symbolic(kSeed));
        // pinned: V W = 2^0 det for L >= 2
        bool pinned = r.verdict == Verdict::EXACT;
        std::string line = describe(r);
        if (r.details.contains("centro_residue"))
            line += ", corner residue " + r.details["centro_residue"].dump();
        o.require(pinned, line);
    }
    return o;
}

Outcome symmetry_invariants() {
    Outcome o;
    for (int L = 1; L <= 8; ++L) {
        auto r = verify(IdentityId::SYMMETRY, L, VerifyMode::random(kSymmetryTrials, kSeed));
        o.require(r.verdict == Verdict::EXACT, describe(r) + " (" + std::to_string(kSymmetryTrials) + " trials)");
    }
    return o;
}

Outcome corruption_detected() {
    Outcome o;
    VerifyOptions bad;
    bad.corrupt = true;
    for (int L = 2; L <= 6; ++L) {
        auto r = verify(IdentityId::REC1P, L, VerifyMode::random(kCorruptTrials, kSeed), bad);
        // rec1p is pinned EXACT; at L=2 the corrupted term only rescales the right side
        bool caught = r.verdict == Verdict::PROPORTIONAL || (r.verdict == Verdict::FAIL && r.witness.has_value());
        o.require(caught, describe(r));
    }
    return o;
}

Outcome performance_floor() {
    Outcome o;
    for (IdentityId id : {IdentityId::REC1P, IdentityId::SYMMETRY}) {
        auto r = verify(id, 10, VerifyMode::random(kSymmetryTrials, kSeed));
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(1) << r.millis / 1000 << " s";
        o.require(r.verdict == Verdict::EXACT, describe(r) + " in " + ms.str());
    }
    return o;
}

struct Criterion {
    int number;
    std::string title;
    double limit;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    set_log_sink(nullptr);
    const std::vector<Criterion> criteria{
        {1, "periodic base values", kLimit1, periodic_base},
        {2, "periodic cross-method, L = 2..6", kLimit2, periodic_cross},
        {3, "first periodic recurrence, L = 2..5", kLimit3, first_periodic_recurrence},
        {4, "second periodic recurrence, L = 3..6", kLimit4, second_periodic_recurrence},
        {5, "mu machinery", kLimit5, mu_machinery},
        {6, "open cross-method and divisibility, L = 2..4", kLimit6, open_cross},
        {7, "open recurrences", kLimit7, open_recurrences},
        {8, "oracle anchoring", kLimit8, oracle_anchoring},
        {9, "block factorization, L = 2..5", kLimit9, block_factorization},
        {10, "symmetry invariants, random", kLimit10, symmetry_invariants},
        {11, "corruption detected within 5 trials", kLimit11, corruption_detected},
        {12, "random REC1P and SYMMETRY at L = 10", kLimit12, performance_floor},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes.push_back(std::string("BAD  exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = s < c.limit;
        bool pass = o.ok && in_time;
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.number << "  " << c.title << "  ["
                  << std::fixed << std::setprecision(2) << s << " s, limit " << std::setprecision(0) << c.limit
                  << " s" << (in_time ? "" : ", OVER") << "]\n";
        for (const auto& n : o.notes) std::cout << "        " << n << "\n";
        std::cout << std::flush;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
    return failed;
}
