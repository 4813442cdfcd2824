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

#include "dtlsum/sumrule.hpp"

#include <array>
#include <atomic>
#include <numeric>

namespace dtlsum {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 7> kMethodNames{{
    {Method::DET_E, "det-e"},
    {Method::DET_MU, "det-mu"},
    {Method::V_OVER_PP, "v-over-pp"},
    {Method::W_OVER_P, "w-over-p"},
    {Method::DET_NU, "det-nu"},
    {Method::DET_LAMBDA, "det-lambda"},
    {Method::ORACLE_INTERP, "oracle"},
}};

LaurentPoly permuted(const LaurentPoly& p, std::vector<std::size_t> perm) { return p.permute_vars(perm); }

std::string describe(const LaurentPoly& p) {
    std::string s = to_text(p);
    if (s.size() > 200) s = s.substr(0, 200) + "...";
    return s;
}

}  // namespace

std::string_view to_string(Method m) {
    for (const auto& [k, n] : kMethodNames) {
        if (k == m) return n;
    }
    return "?";
}

std::string_view to_string(Model m) { return m == Model::PERIODIC ? "periodic" : "open"; }

std::optional<Method> parse_method(std::string_view name) {
    for (const auto& [k, n] : kMethodNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

std::optional<Model> parse_model(std::string_view name) {
    if (name == "periodic") return Model::PERIODIC;
    if (name == "open") return Model::OPEN;
    return std::nullopt;
}

Model model_of(Method m) {
    switch (m) {
        case Method::DET_E:
        case Method::DET_MU: return Model::PERIODIC;
        case Method::ORACLE_INTERP: throw std::invalid_argument("the oracle serves both models");
        default: return Model::OPEN;
    }
}

const std::vector<Method>& methods_of(Model model) {
    static const std::vector<Method> periodic{Method::DET_E, Method::DET_MU};
    static const std::vector<Method> open{Method::DET_LAMBDA, Method::V_OVER_PP, Method::W_OVER_P, Method::DET_NU};
    return model == Model::PERIODIC ? periodic : open;
}

Method reference_method(Model model) { return model == Model::PERIODIC ? Method::DET_E : Method::DET_LAMBDA; }

void assert_invariants(const LaurentPoly& p, bool inversion, std::string_view what) {
    const std::size_t n = p.vars()->size();
    if (n >= 2) {
        std::vector<std::size_t> swap(n), cycle(n);
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[0], swap[1]);
        for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
        if (!(permuted(p, swap) == p) || !(permuted(p, cycle) == p))
            throw InvariantViolation(std::string(what) + " is not symmetric: " + describe(p));
    }
    if (inversion && n >= 1) {
        const std::string& v = p.vars()->name(0);
        if (!(substitute(p, v, {Cyclo(1), v, -1}) == p))
            throw InvariantViolation(std::string(what) + " is not invariant under " + v + " -> 1/" + v);
    }
}

namespace {

Cyclo normalization_against(const LaurentPoly& reference, const LaurentPoly& value, Method method) {
    auto cmp = compare(reference, value);
    switch (cmp.kind) {
        case CompareResult::Kind::Equal: return Cyclo(1);
        case CompareResult::Kind::Proportional: return cmp.constant;
        default:
            throw MethodMismatch(std::string(to_string(method)) + " is not proportional to the reference route",
                                 cmp.witness);
    }
}

SumRuleResult compute(const VarSetPtr& vars, Method method, bool normalize, Model model) {
    if (vars->size() < 1) throw SizeRuleError("sum rule needs at least one variable");
    PolyRing ring(vars);
    auto gens = ring.generators();
    Args<PolyRing> args(gens);
    SumRuleResult r{sum_rule_value(ring, method, args), method, vars, Cyclo(1)};
    assert_invariants(r.value, model == Model::OPEN, to_string(method));
    const Method ref = reference_method(model);
    if (normalize && method != ref) r.normalization = normalization_against(sum_rule_value(ring, ref, args), r.value, method);
    return r;
}

}  // namespace

SumRuleResult zp_compute(const VarSetPtr& vars, Method method, bool normalize) {
    if (model_of(method) != Model::PERIODIC) throw std::invalid_argument("zp_compute takes DET_E or DET_MU");
    return compute(vars, method, normalize, Model::PERIODIC);
}

SumRuleResult z_open_compute(const VarSetPtr& vars, Method method, bool normalize) {
    if (method == Method::ORACLE_INTERP || model_of(method) != Model::OPEN)
        throw std::invalid_argument("z_open_compute takes an open method");
    return compute(vars, method, normalize, Model::OPEN);
}

// ---- interpolation oracle --------------------------------------------------

namespace {

struct Node {
    LaurentPoly x;      // node in the last variable, over the other variables
    LaurentPoly value;  // sum rule there
    std::string label;
};

// Newton coefficients of the polynomial through (x_k, y_k), k < m.
std::vector<LaurentPoly> divided_differences(const std::vector<Node>& nodes, const std::vector<LaurentPoly>& y,
                                             std::size_t m) {
    std::vector<LaurentPoly> c(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m));
    for (std::size_t j = 1; j < m; ++j) {
        for (std::size_t i = m - 1; i >= j; --i) {
            c[i] = exact_divide(c[i] - c[i - 1], nodes[i].x - nodes[i - j].x);
        }
    }
    return c;
}

LaurentPoly newton_at(const std::vector<LaurentPoly>& c, const std::vector<Node>& nodes, const LaurentPoly& x) {
    LaurentPoly s = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) s = s * (x - nodes[j].x) + c[j];
    return s;
}

// Z over z1..zn from Z over z1..z(n-1).
LaurentPoly oracle_step(Model model, const VarSetPtr& full, const LaurentPoly& prev) {
    const std::size_t n = full->size();
    const VarSetPtr& others = prev.vars();
    PolyRing ring(others);
    const Cyclo w = Cyclo::omega(), wi = omega_pow(-1);

    // recurrence value with the pair (w, u) = (zeta/w, zeta w) or (zeta w, zeta/w)
    auto value_at = [&](std::size_t k, const Cyclo& c) {
        auto args = ring.generators();
        args[k] = args[k] * c;
        Args<PolyRing> a(args);
        auto f = model == Model::OPEN ? F_open(ring, a, k) : F_periodic(ring, a, k);
        return f * substitute(prev, others->name(k), {c, others->name(k), 1});
    };

    std::vector<Node> nodes;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        auto u = ring.gen(k);
        const std::string& un = others->name(k);
        auto down = value_at(k, wi);  // w = u / w^2, zeta = u / w
        auto up = value_at(k, w);     // w = u w^2, zeta = u w
        nodes.push_back({u * omega_pow(-2), down, "w^-2*" + un});
        nodes.push_back({u * omega_pow(2), up, "w^2*" + un});
        if (model == Model::OPEN) {
            // inversion in the last variable
            auto ui = ring.inv(u);
            nodes.push_back({ui * omega_pow(2), down, "w^2/" + un});
            nodes.push_back({ui * omega_pow(-2), up, "w^-2/" + un});
        }
    }

    std::optional<OracleInconsistency> last_error;
    for (int d = 0; d <= kOracleMaxDegree; ++d) {
        // open: g(x) = x^d Z(x) is a polynomial of degree <= 2d
        const std::size_t m = model == Model::OPEN ? static_cast<std::size_t>(2 * d + 1) : static_cast<std::size_t>(d + 1);
        if (m > nodes.size()) break;
        std::vector<LaurentPoly> y;
        for (const auto& nd : nodes) y.push_back(model == Model::OPEN ? nd.value * nd.x.pow(d) : nd.value);
        auto c = divided_differences(nodes, y, m);
        bool ok = true;
        for (std::size_t s = m; s < nodes.size() && ok; ++s) {
            auto fitted = newton_at(c, nodes, nodes[s].x);
            if (!(fitted == y[s])) {
                ok = false;
                last_error.emplace("surplus point " + nodes[s].label + " disagrees at degree " + std::to_string(d), y[s],
                                   fitted);
            }
        }
        if (!ok) continue;
        if (m == nodes.size()) {
            static std::atomic<bool> told{false};
            if (!told.exchange(true))
                log_note("oracle at " + std::to_string(n) + " variables: no surplus point left to check");
        }

        // rebuild over the full list
        PolyRing fr(full);
        auto x = fr.gen(n - 1);
        LaurentPoly g = c.back().rebase(full);
        for (std::size_t j = c.size() - 1; j-- > 0;) g = g * (x - nodes[j].x.rebase(full)) + c[j].rebase(full);
        return model == Model::OPEN ? g * x.pow(-d) : g;
    }
    if (last_error) throw *last_error;
    throw OracleInconsistency("too few interpolation points", LaurentPoly(others), LaurentPoly(others));
}

}  // namespace

SumRuleResult oracle_interpolate(Model model, int L, bool normalize) {
    if (L < 0 || (model == Model::PERIODIC && L < 1)) throw SizeRuleError("oracle needs L >= 1 (periodic) or L >= 0 (open)");
    auto vars = VarSet::numbered(L);
    // initial condition: one variable (or none) gives 1
    LaurentPoly z = LaurentPoly::constant(VarSet::numbered(std::min(L, 1)), Cyclo(1));
    for (int n = 2; n <= L; ++n) z = oracle_step(model, VarSet::numbered(n), z);
    SumRuleResult r{z, Method::ORACLE_INTERP, vars, Cyclo(1)};
    assert_invariants(r.value, model == Model::OPEN, "oracle");
    if (normalize && L >= 1) {
        PolyRing ring(vars);
        auto gens = ring.generators();
        r.normalization = normalization_against(sum_rule_value(ring, reference_method(model), Args<PolyRing>(gens)),
                                                r.value, Method::ORACLE_INTERP);
    }
    return r;
}

}  // namespace dtlsum
