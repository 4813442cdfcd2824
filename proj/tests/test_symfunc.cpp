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

#include <numeric>

#include "dtlsum/symfunc.hpp"

using namespace dtlsum;

namespace {

const Cyclo w = Cyclo::omega();

LaurentPoly P(const VarSetPtr& vs, std::string_view text) { return parse_text(text, vs); }

LaurentPoly invert(const LaurentPoly& p, std::string_view var) {
    return substitute(p, var, {Cyclo(1), std::string(var), -1});
}

LaurentPoly swap_vars(const LaurentPoly& p, std::size_t a, std::size_t b) {
    std::vector<std::size_t> perm(p.vars()->size());
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[a], perm[b]);
    return p.permute_vars(perm);
}

bool symmetric(const LaurentPoly& p, std::size_t n) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(swap_vars(p, i, i + 1) == p)) return false;
    }
    return true;
}

bool inversion_invariant(const LaurentPoly& p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!(invert(p, p.vars()->name(i)) == p)) return false;
    }
    return true;
}

// mu formula with eps in place of E, summed over the doubled list
LaurentPoly mu_with_eps(const VarSetPtr& vs, int i) {
    PolyRing ring(vs);
    Families<PolyRing> f(ring, ring.generators());
    const int L = f.size();
    LaurentPoly s = ring.zero();
    for (int m = 0; m <= 2 * L; ++m) {
        Cyclo c = omega_pow(2 * (i - m) - 1) - omega_pow(2 * (m - i) + 1);
        if ((L + m) % 2 != 0) c = -c;
        s += f.eps(m) * f.eps(2 * i - m - 1) * c;
    }
    return s * half_inv_omega_gap();
}

}  // namespace

TEST_CASE("elem_E examples") {
    CHECK(elem_E(VarSet::numbered(2), 1) == P(VarSet::numbered(2), "z1 + z2"));
    CHECK(elem_E(VarSet::numbered(3), 4).is_zero());
    CHECK(elem_E(VarSet::numbered(3), -1).is_zero());
    CHECK(elem_E(VarSet::numbered(3), 0) == LaurentPoly::constant(VarSet::numbered(3), 1));
    auto v3 = VarSet::numbered(3);
    CHECK(elem_E(v3, 2) == P(v3, "z1*z2 + z1*z3 + z2*z3"));
}

TEST_CASE("eps examples") {
    auto v1 = VarSet::numbered(1);
    CHECK(eps(v1, 1) == P(v1, "z1 + z1^-1"));
    CHECK(eps(v1, 2) == P(v1, "1"));
    auto v2 = VarSet::numbered(2);
    for (int m = 0; m <= 4; ++m) CHECK(eps(v2, m) == eps(v2, 4 - m));
}

TEST_CASE("eps convolution agrees with the doubled list") {
    for (int n = 1; n <= 4; ++n) {
        auto vs = VarSet::numbered(n);
        for (int m = -1; m <= 2 * n + 1; ++m) CHECK(eps_conv(vs, m) == eps(vs, m));
    }
}

TEST_CASE("F_open examples") {
    auto vs = VarSet::make({"z0", "z1", "z2"});
    auto f = F_open(vs, 1);
    auto lit = P(vs, "z1 + z0") * P(vs, "z1*z0 + 1") * P(vs, "z1 + z2") * P(vs, "z1*z2 + 1") *
               P(vs, "z1^-2*z0^-1*z2^-1");
    CHECK(f == lit);
    CHECK(invert(f, "z0") == f);
    CHECK(invert(f, "z2") == f);
    CHECK_THROWS(F_open(vs, 3));
}

TEST_CASE("F generates eps of the remaining variables") {
    // offset t^(i - n), n the number of remaining variables
    for (int n = 1; n <= 4; ++n) {
        auto vs = with_var(VarSet::numbered(n), "t");
        auto f = F_open(vs, static_cast<std::size_t>(n));
        for (int i = -1; i <= 2 * n + 1; ++i) {
            auto c = coeff_in_var(f, "t", i - n);
            CHECK(c == eps(c.vars(), i));
        }
        CHECK(f.min_exponent(static_cast<std::size_t>(n)) == -n);
        CHECK(f.max_exponent(static_cast<std::size_t>(n)) == n);
    }
}

TEST_CASE("F_periodic examples") {
    auto v2 = VarSet::numbered(2);
    CHECK(F_periodic(v2, 1) == P(v2, "z2^2 + z1*z2"));
    auto v1 = VarSet::numbered(1);
    CHECK(F_periodic(v1, 0) == P(v1, "z1"));
    for (int n = 1; n <= 5; ++n) CHECK(F_periodic(VarSet::numbered(n), 0).total_degree() == n);
}

TEST_CASE("Pp_gen examples") {
    auto v1 = VarSet::numbered(1);
    auto p1 = Pp_gen(v1, "t");
    CHECK(p1 == P(p1.vars(), "-z1*t^2"));
    auto v2 = VarSet::numbered(2);
    auto p2 = Pp_gen(v2, "t");
    CHECK(p2 == P(p2.vars(), "z1*t^4 + z2*t^4 - z1^2*z2*t^2 - z1*z2^2*t^2"));
    auto p3 = Pp_gen(VarSet::numbered(3), "t");
    for (const auto& [m, c] : p3.terms()) CHECK(m.e[3] % 2 == 0);
    CHECK(coeff_in_var(Pp_gen(v1, "t"), "t", 2) == P(v1, "-z1"));
}

TEST_CASE("mu examples and coefficient extraction") {
    auto v2 = VarSet::numbered(2);
    CHECK(mu(v2, 1) == P(v2, "z1 + z2"));
    CHECK(mu(v2, 2) == P(v2, "-z1^2*z2 - z1*z2^2"));
    CHECK(mu(v2, 3).is_zero());
    CHECK(mu(v2, 0).is_zero());
    for (int L = 1; L <= 5; ++L) {
        auto vs = VarSet::numbered(L);
        auto g = Pp_gen(vs, "t");
        for (int i = 1; i <= L; ++i) CHECK(mu(vs, i) == coeff_in_var(g, "t", 2 * (L - i + 1)));
        CHECK(coeff_in_var(g, "t", 0).is_zero());
    }
}

TEST_CASE("nu against the mu formula on eps") {
    // holds up to the index-dependent sign (-1)^(i+1)
    auto v2 = VarSet::numbered(2);
    for (int i = 1; i <= 4; ++i) {
        auto m = mu_with_eps(v2, i);
        CHECK(nu(v2, i) == (i % 2 == 0 ? -m : m));
    }
}

TEST_CASE("nu and lambda at one variable") {
    auto v1 = VarSet::numbered(1);
    auto e1 = eps(v1, 1);
    CHECK(nu(v1, 1) == e1);
    CHECK(nu(v1, 2) == e1);
    CHECK(nu(v1, 3).is_zero());
    CHECK(nu(v1, 0).is_zero());
    CHECK(lam(v1, 0) == e1);
    CHECK(P_open_gen(v1, "t") == P(P_open_gen(v1, "t").vars(), "z1 + z1^-1"));
}

TEST_CASE("lambda generates the open polynomial") {
    for (int L = 1; L <= 4; ++L) {
        auto vs = VarSet::numbered(L);
        auto g = P_open_gen(vs, "t");
        for (int i = 0; i <= L + 1; ++i) {
            auto up = coeff_in_var(g, "t", 2 * i);
            auto down = coeff_in_var(g, "t", -2 * i);
            CHECK(up == down);
            CHECK(up == lam(vs, i).rebase(up.vars()));
            CHECK(coeff_in_var(g, "t", 2 * i + 1).is_zero());
        }
        CHECK(lam(vs, L - 1) == (L % 2 == 1 ? nu(vs, 1) : -nu(vs, 1)));
        CHECK(lam(vs, L).is_zero());
    }
}

TEST_CASE("lambda below zero mirrors the positive index") {
    for (int L = 1; L <= 4; ++L) {
        auto vs = VarSet::numbered(L);
        for (int i = 1; i <= L + 1; ++i) CHECK(lam(vs, -i) == lam(vs, i));
    }
}

TEST_CASE("open polynomial recurrence in t") {
    for (int L = 2; L <= 4; ++L) {
        auto vs = VarSet::numbered(L);
        auto g = P_open_gen(vs, "t");
        std::string a = vs->name(L - 2), b = vs->name(L - 1);
        auto s = substitute(substitute(g, a, {w, "zeta", 1}), b, {w.inverse(), "zeta", 1});
        // shortened list z1..z_{L-2}, zeta
        std::vector<std::string> names(vs->names().begin(), vs->names().end() - 2);
        names.push_back("zeta");
        auto sv = VarSet::make(names);
        auto shorter = P_open_gen(sv, "t").rebase(s.vars());
        auto factor = P(s.vars(), "zeta^2 + zeta^-2 - t^2 - t^-2");
        CHECK(s == factor * shorter);
    }
}

TEST_CASE("families are symmetric; inversion separates them") {
    for (int L = 2; L <= 4; ++L) {
        auto vs = VarSet::numbered(L);
        auto n = static_cast<std::size_t>(L);
        for (int i = 0; i <= 2 * L; ++i) {
            CHECK(symmetric(elem_E(vs, i), n));
            CHECK(symmetric(eps(vs, i), n));
            CHECK(symmetric(mu(vs, i), n));
            CHECK(symmetric(nu(vs, i), n));
            CHECK(inversion_invariant(eps(vs, i), n));
            CHECK(inversion_invariant(nu(vs, i), n));
            if (i < L) {
                CHECK(symmetric(lam(vs, i), n));
                CHECK(inversion_invariant(lam(vs, i), n));
            }
        }
        CHECK(inversion_invariant(P_open_fixed(vs), n));
        CHECK_FALSE(inversion_invariant(elem_E(vs, 1), n));
        CHECK_FALSE(inversion_invariant(mu(vs, 1), n));
        CHECK_FALSE(inversion_invariant(F_periodic(vs, 0), n));
    }
}

TEST_CASE("mu under the (-z, z) specialization") {
    for (int L = 2; L <= 6; ++L) {
        auto vs = VarSet::numbered(L);
        std::string a = vs->name(L - 2), z = vs->name(L - 1);
        auto sv = VarSet::make({vs->names().begin(), vs->names().end() - 2});
        for (int i = 0; i <= L + 1; ++i) {
            auto lhs = substitute(mu(vs, i), a, {Cyclo(-1), z, 1});
            auto zp = LaurentPoly::variable(lhs.vars(), z);
            auto rhs = zp.pow(4) * mu(sv, i - 2).rebase(lhs.vars()) + zp.pow(2) * mu(sv, i - 1).rebase(lhs.vars()) +
                       mu(sv, i).rebase(lhs.vars());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("periodic generating polynomial under (-z, z)") {
    for (int L = 2; L <= 5; ++L) {
        auto vs = VarSet::numbered(L);
        std::string a = vs->name(L - 2), z = vs->name(L - 1);
        auto lhs = substitute(Pp_gen(vs, "t"), a, {Cyclo(-1), z, 1});
        auto sv = VarSet::make({vs->names().begin(), vs->names().end() - 2});
        auto shorter = Pp_gen(sv, "t").rebase(lhs.vars());
        auto factor = P(lhs.vars(), "t^4 + t^2*" + z + "^2 + " + z + "^4");
        CHECK(lhs == factor * shorter);
    }
}

TEST_CASE("fixed periodic polynomial") {
    auto v1 = VarSet::numbered(1);
    CHECK(Pp_fixed(v1) == P(v1, "1"));
    auto xy = VarSet::make({"x", "y"});
    CHECK(Pp_fixed(xy) == eps(xy, 1));
    // z-pair recurrence with factor z + 1/z
    for (int L = 2; L <= 5; ++L) {
        auto vs = VarSet::numbered(L);
        auto s = substitute(substitute(Pp_fixed(vs), vs->name(L - 2), {w, "zeta", 1}), vs->name(L - 1),
                            {w.inverse(), "zeta", 1});
        std::vector<std::string> names(vs->names().begin(), vs->names().end() - 2);
        names.push_back("zeta");
        auto shorter = Pp_fixed(VarSet::make(names)).rebase(s.vars());
        CHECK(s == P(s.vars(), "zeta + zeta^-1") * shorter);
    }
}

TEST_CASE("fixed open polynomial recurrence") {
    for (int L = 2; L <= 5; ++L) {
        auto vs = VarSet::numbered(L);
        auto s = substitute(substitute(P_open_fixed(vs), vs->name(L - 2), {w, "zeta", 1}), vs->name(L - 1),
                            {w.inverse(), "zeta", 1});
        std::vector<std::string> names(vs->names().begin(), vs->names().end() - 2);
        names.push_back("zeta");
        auto shorter = P_open_fixed(VarSet::make(names)).rebase(s.vars());
        CHECK(s == P(s.vars(), "zeta^2 + 1 + zeta^-2") * shorter);
    }
}
