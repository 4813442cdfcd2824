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

#include "dtlsum/verify.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "dtlsum/sampling.hpp"

namespace dtlsum {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 21> kIdNames{{
    {IdentityId::REC1P, "rec1p"},
    {IdentityId::REC2P, "rec2p"},
    {IdentityId::RECZ, "recz"},
    {IdentityId::REC2_OPEN, "rec2-open"},
    {IdentityId::PMREC, "pmrec"},
    {IdentityId::PPMREC, "ppmrec"},
    {IdentityId::PREC1, "prec1"},
    {IdentityId::MUREC, "murec"},
    {IdentityId::RECP, "recp"},
    {IdentityId::GENVAR, "genvar"},
    {IdentityId::GENMU, "genmu"},
    {IdentityId::EPS_CONV, "eps-conv"},
    {IdentityId::ZTILDE_VW, "ztilde-vw"},
    {IdentityId::ZTILDE_REC, "ztilde-rec"},
    {IdentityId::CROSS_PERIODIC, "cross-periodic"},
    {IdentityId::CROSS_OPEN, "cross-open"},
    {IdentityId::ORACLE_MATCH, "oracle-match"},
    {IdentityId::SYMMETRY, "symmetry"},
    {IdentityId::MU_REDUCTION, "mu-reduction"},
    {IdentityId::VREC, "vrec"},
    {IdentityId::WREC, "wrec"},
}};

bool is_periodic(IdentityId id) {
    switch (id) {
        case IdentityId::REC1P:
        case IdentityId::REC2P:
        case IdentityId::PMREC:
        case IdentityId::MUREC:
        case IdentityId::RECP:
        case IdentityId::GENMU:
        case IdentityId::CROSS_PERIODIC:
        case IdentityId::MU_REDUCTION: return true;
        default: return false;
    }
}

bool is_mixed(IdentityId id) { return id == IdentityId::ORACLE_MATCH || id == IdentityId::SYMMETRY; }

}  // namespace

std::string_view to_string(IdentityId id) {
    for (const auto& [k, n] : kIdNames) {
        if (k == id) return n;
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
    for (const auto& [k, n] : kIdNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& [k, n] : kIdNames) v.push_back(k);
        return v;
    }();
    return ids;
}

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "periodic") return Suite::PERIODIC;
    if (name == "open") return Suite::OPEN;
    if (name == "all") return Suite::ALL;
    return std::nullopt;
}

std::vector<IdentityId> suite_identities(Suite suite) {
    std::vector<IdentityId> out;
    for (IdentityId id : all_identities()) {
        if (suite == Suite::ALL || (!is_mixed(id) && is_periodic(id) == (suite == Suite::PERIODIC))) out.push_back(id);
    }
    return out;
}

int min_size(IdentityId id) {
    switch (id) {
        case IdentityId::GENVAR:
        case IdentityId::GENMU:
        case IdentityId::EPS_CONV:
        case IdentityId::ZTILDE_VW:
        case IdentityId::CROSS_PERIODIC:
        case IdentityId::CROSS_OPEN:
        case IdentityId::ORACLE_MATCH:
        case IdentityId::SYMMETRY: return 1;
        case IdentityId::REC2P: return 3;
        default: return 2;
    }
}

int symbolic_ceiling(IdentityId id) { return is_periodic(id) ? 6 : 5; }

VarSetPtr identity_vars(IdentityId id, int L) {
    auto numbered = [](int n, std::vector<std::string> extra) {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
        for (auto& e : extra) names.push_back(std::move(e));
        return VarSet::make(std::move(names));
    };
    switch (id) {
        case IdentityId::REC1P:
        case IdentityId::RECZ:
        case IdentityId::PMREC:
        case IdentityId::PPMREC:
        case IdentityId::ZTILDE_REC:
        case IdentityId::VREC:
        case IdentityId::WREC: return numbered(L - 2, {"zeta"});
        case IdentityId::REC2P:
        case IdentityId::REC2_OPEN: return numbered(L - 2, {"t"});
        case IdentityId::PREC1: return numbered(L - 2, {"zeta", "t"});
        case IdentityId::MUREC:
        case IdentityId::MU_REDUCTION: return numbered(L - 2, {"z"});
        case IdentityId::RECP: return numbered(L - 2, {"z", "t"});
        case IdentityId::GENVAR: return numbered(L - 1, {"t"});
        case IdentityId::GENMU: return numbered(L, {"t"});
        default: return numbered(L, {});
    }
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::EXACT: return "EXACT";
        case Verdict::PROPORTIONAL: return "PROPORTIONAL";
        default: return "FAIL";
    }
}

namespace {

// ---- identity bodies -------------------------------------------------------

template <class T>
struct Check {
    std::string label;
    T lhs, rhs;
    bool informative = false;
    std::optional<std::string> error;
    std::optional<EvalPoint> witness;  // only with error
};

/// Symbolic oracle results, shared by every thread.
const LaurentPoly& cached_oracle(Model model, int L) {
    static std::mutex mu;
    static std::map<std::pair<Model, int>, LaurentPoly> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(model, L);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, oracle_interpolate(model, L, false).value).first;
    return it->second;
}

template <ExactRing R>
class Body {
  public:
    using T = typename R::value_type;
    using List = std::vector<T>;

    Body(const R& ring, Args<R> args, int L, json& notes) : ring_(ring), a_(args), L_(L), notes_(notes) {}

    std::vector<Check<T>> run(IdentityId id) {
        switch (id) {
            case IdentityId::REC1P: rec1(Model::PERIODIC); break;
            case IdentityId::RECZ: rec1(Model::OPEN); break;
            case IdentityId::REC2P: rec2(Model::PERIODIC); break;
            case IdentityId::REC2_OPEN: rec2(Model::OPEN); break;
            case IdentityId::PMREC: pair_rec("pmrec", [&](const List& v) { return Pp_fixed(ring_, Args<R>(v)); }, inv_sum(1)); break;
            case IdentityId::PPMREC:
                pair_rec("ppmrec", [&](const List& v) { return P_open_fixed(ring_, Args<R>(v)); }, inv_sum(2) + one());
                break;
            case IdentityId::PREC1: prec1(); break;
            case IdentityId::MUREC: murec(); break;
            case IdentityId::RECP: recp(); break;
            case IdentityId::GENVAR: genvar(); break;
            case IdentityId::GENMU: genmu(); break;
            case IdentityId::EPS_CONV: eps_conv_check(); break;
            case IdentityId::ZTILDE_VW: ztilde_vw(); break;
            case IdentityId::ZTILDE_REC: {
                auto z = a_[static_cast<std::size_t>(L_ - 2)];
                T factor = inv_sum(1) * (inv_sum(2) + one());
                for (const auto& y : rest()) {
                    auto f = (z + y) * (z * y + one()) * ring_.inv(z * y);
                    factor = factor * f * f;
                }
                pair_rec("ztilde-rec", [&](const List& v) { return ztilde_value(ring_, Args<R>(v)); }, factor);
                break;
            }
            case IdentityId::VREC:
                pair_rec("vrec", [&](const List& v) { return v_value(ring_, Args<R>(v)); }, open_f() * inv_sum(1));
                break;
            case IdentityId::WREC:
                pair_rec("wrec", [&](const List& v) { return w_value(ring_, Args<R>(v)); }, open_f() * (inv_sum(2) + one()));
                break;
            case IdentityId::CROSS_PERIODIC: cross_periodic(); break;
            case IdentityId::CROSS_OPEN: cross_open(); break;
            case IdentityId::ORACLE_MATCH: oracle_match(); break;
            case IdentityId::SYMMETRY: symmetry(); break;
            case IdentityId::MU_REDUCTION: mu_reduction(); break;
        }
        return std::move(out_);
    }

  private:
    T one() const { return ring_.one(); }

    T pw(const T& x, int k) const {
        T base = k < 0 ? ring_.inv(x) : x;
        T r = one();
        for (int i = 0; i < std::abs(k); ++i) r = r * base;
        return r;
    }

    List head(int n) const { return List(a_.begin(), a_.begin() + n); }
    List rest() const { return head(L_ - 2); }
    static List plus(List v, std::initializer_list<T> more) {
        v.insert(v.end(), more);
        return v;
    }

    // zeta^k + zeta^-k for the pair variable
    T inv_sum(int k) const {
        const auto& z = a_[static_cast<std::size_t>(L_ - 2)];
        return pw(z, k) + pw(z, -k);
    }

    // prod over the rest of (zeta + y)(zeta y + 1)/(zeta y)
    T open_f() const {
        List s = plus(rest(), {a_[static_cast<std::size_t>(L_ - 2)]});
        return F_open(ring_, Args<R>(s), s.size() - 1);
    }

    void add(std::string label, T lhs, T rhs, bool informative = false) {
        out_.push_back({std::move(label), std::move(lhs), std::move(rhs), informative, std::nullopt, std::nullopt});
    }

    void add_error(std::string label, std::string what, std::optional<EvalPoint> witness = std::nullopt) {
        out_.push_back({std::move(label), ring_.zero(), ring_.zero(), false, std::move(what), std::move(witness)});
    }

    // value or the reason it could not be formed
    template <class F>
    std::pair<std::optional<T>, std::string> attempt(F&& f) {
        try {
            return {f(), {}};
        } catch (const DivisibilityFailure& e) {
            return {std::nullopt, e.what()};
        }
    }

    T z_of(Model model, const List& v, Method m) {
        return model == Model::PERIODIC ? zp_value(ring_, m, Args<R>(v)) : z_open_value(ring_, m, Args<R>(v));
    }

    // Z(.., zeta w, zeta/w) = F(.., zeta | zeta) Z(.., zeta)
    void rec1(Model model) {
        const Method m = reference_method(model);
        const auto& z = a_[static_cast<std::size_t>(L_ - 2)];
        List full = plus(rest(), {z * Cyclo::omega(), z * omega_pow(-1)});
        List shorter = plus(rest(), {z});
        T lhs = z_of(model, full, m);
        T zs = z_of(model, shorter, m);
        Args<R> sa(shorter);
        T f = model == Model::PERIODIC ? F_periodic(ring_, sa, shorter.size() - 1) : F_open(ring_, sa, shorter.size() - 1);
        add(model == Model::PERIODIC ? "rec1p" : "recz", lhs, f * zs);
        auto [q, err] = attempt([&] { return ring_.divide(lhs, zs); });
        if (q) {
            add("quotient", f, *q);
        } else {
            add_error("quotient", err);
        }
    }

    // Z(.., t, -t) = P(..|t) Z(..)
    void rec2(Model model) {
        const Method m = reference_method(model);
        const auto& t = a_[static_cast<std::size_t>(L_ - 2)];
        List r = rest();
        T lhs = z_of(model, plus(r, {t, -t}), m);
        T p = model == Model::PERIODIC ? Pp_gen(ring_, Args<R>(r), t) : P_open_gen(ring_, Args<R>(r), t);
        add(model == Model::PERIODIC ? "rec2p" : "rec2-open", lhs, p * z_of(model, r, m));
    }

    template <class F>
    void pair_rec(std::string label, F&& f, const T& factor) {
        const auto& z = a_[static_cast<std::size_t>(L_ - 2)];
        add(std::move(label), f(plus(rest(), {z * Cyclo::omega(), z * omega_pow(-1)})), factor * f(plus(rest(), {z})));
    }

    void prec1() {
        const auto& z = a_[static_cast<std::size_t>(L_ - 2)];
        const auto& t = a_[static_cast<std::size_t>(L_ - 1)];
        List full = plus(rest(), {z * Cyclo::omega(), z * omega_pow(-1)});
        List shorter = plus(rest(), {z});
        T factor = inv_sum(2) - pw(t, 2) - pw(t, -2);
        add("prec1", P_open_gen(ring_, Args<R>(full), t), factor * P_open_gen(ring_, Args<R>(shorter), t));
    }

    void murec() {
        const auto& z = a_[static_cast<std::size_t>(L_ - 2)];
        Families<R> ff(ring_, plus(rest(), {-z, z}));
        Families<R> fr(ring_, rest());
        T z2 = z * z, z4 = z2 * z2;
        for (int i = 0; i <= L_ + 1; ++i) {
            add("mu" + std::to_string(i), ff.mu(i), z4 * fr.mu(i - 2) + z2 * fr.mu(i - 1) + fr.mu(i));
        }
    }

    void recp() {
        const auto& z = a_[static_cast<std::size_t>(L_ - 2)];
        const auto& t = a_[static_cast<std::size_t>(L_ - 1)];
        List r = rest();
        T z2 = z * z, t2 = t * t;
        add("recp", Pp_gen(ring_, Args<R>(plus(r, {-z, z})), t), (t2 * t2 + t2 * z2 + z2 * z2) * Pp_gen(ring_, Args<R>(r), t));
    }

    void genvar() {
        const int n = L_ - 1;
        const auto& t = a_[static_cast<std::size_t>(n)];
        Families<R> f(ring_, head(n));
        T s = ring_.zero();
        for (int i = 0; i <= 2 * n; ++i) s = s + pw(t, i - n) * f.eps(i);
        add("genvar", F_open(ring_, a_, static_cast<std::size_t>(n)), s);
    }

    void genmu() {
        const auto& t = a_[static_cast<std::size_t>(L_)];
        List zs = head(L_);
        Families<R> f(ring_, zs);
        T s = ring_.zero();
        for (int i = 1; i <= L_; ++i) s = s + pw(t, 2 * i) * f.mu(L_ - i + 1);
        add("genmu", Pp_gen(ring_, Args<R>(zs), t), s);
    }

    void eps_conv_check() {
        Families<R> f(ring_, head(L_));
        for (int m = -1; m <= 2 * L_ + 1; ++m) add("eps" + std::to_string(m), eps_conv(ring_, a_, m), f.eps(m));
    }

    void ztilde_vw() {
        add("ztilde-vw", ztilde_value(ring_, a_), v_value(ring_, a_) * w_value(ring_, a_));
        if (!notes_.contains("centro_residue")) {
            auto cb = centro_blocks(ring_, build_matrix(ring_, MatrixKind::EPS_DOUBLED, a_));
            notes_["centro_residue"] = cb.residue;
        }
    }

    void cross_periodic() {
        List v = head(L_);
        T e = zp_value(ring_, Method::DET_E, Args<R>(v));
        add("det-mu/det-e", e, zp_value(ring_, Method::DET_MU, Args<R>(v)));
        if (L_ >= 2) {
            // staircase of side L - 2, i.e. without the E_1 prefactor
            Families<R> f(ring_, v);
            const auto n = static_cast<std::size_t>(L_ - 2);
            Matrix<T> m(n, n, ring_.zero());
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) m(i, j) = f.E(3 * static_cast<int>(j + 1) - 2 * static_cast<int>(i + 1));
            }
            T stripped = det(ring_, m);
            add("det-mu/det-e-stripped", stripped, zp_value(ring_, Method::DET_MU, Args<R>(v)), true);
            add("det-e/e1*det-e-stripped", e, f.E(1) * stripped, true);
        }
    }

    void cross_open() {
        const auto& methods = methods_of(Model::OPEN);
        std::vector<std::pair<std::optional<T>, std::string>> vals;
        for (Method m : methods) vals.push_back(attempt([&] { return z_open_value(ring_, m, a_); }));
        for (std::size_t i = 0; i < methods.size(); ++i) {
            for (std::size_t j = i + 1; j < methods.size(); ++j) {
                std::string label = std::string(to_string(methods[j])) + "/" + std::string(to_string(methods[i]));
                if (!vals[i].first || !vals[j].first) {
                    std::size_t bad = vals[i].first ? j : i;
                    add_error(label, std::string(to_string(methods[bad])) + ": " + vals[bad].second);
                } else {
                    add(label, *vals[i].first, *vals[j].first);
                }
            }
        }
    }

    void oracle_match() {
        for (Model model : {Model::PERIODIC, Model::OPEN}) {
            const Method ref = reference_method(model);
            std::string label = "oracle/" + std::string(to_string(ref));
            try {
                const LaurentPoly& o = cached_oracle(model, L_);
                T ov;
                if constexpr (std::is_same_v<R, PolyRing>) {
                    ov = o.rebase(ring_.vars());
                } else {
                    ov = evaluate(o, EvalPoint{o.vars(), List(a_.begin(), a_.end())});
                }
                add(label, z_of(model, head(L_), ref), ov);
            } catch (const OracleInconsistency& e) {
                add_error(label, e.what(), compare(e.expected(), e.fitted()).witness);
            } catch (const DivisibilityFailure& e) {
                add_error(label, e.what());
            }
        }
    }

    void symmetry() {
        List base = head(L_);
        std::vector<std::pair<std::string, List>> moves;
        if (L_ >= 2) {
            List s = base;
            std::swap(s[0], s[1]);
            moves.emplace_back("swap", s);
        }
        if (L_ >= 3) {
            List c(base.begin() + 1, base.end());
            c.push_back(base[0]);
            moves.emplace_back("cycle", c);
        }
        List inv = base;
        inv[0] = ring_.inv(inv[0]);

        auto compare_all = [&](const std::string& name, auto&& f, bool inversion) {
            T v = f(base);
            for (const auto& [mv, args] : moves) add(name + "@" + mv, v, f(args));
            if (inversion) add(name + "@invert", v, f(inv));
        };
        for (Method m : methods_of(Model::PERIODIC)) {
            compare_all(std::string(to_string(m)), [&](const List& v) { return zp_value(ring_, m, Args<R>(v)); }, false);
        }
        for (Method m : {Method::DET_LAMBDA, Method::V_OVER_PP, Method::DET_NU}) {
            compare_all(std::string(to_string(m)), [&](const List& v) { return z_open_value(ring_, m, Args<R>(v)); }, true);
        }
        compare_all("V", [&](const List& v) { return v_value(ring_, Args<R>(v)); }, true);
        compare_all("W", [&](const List& v) { return w_value(ring_, Args<R>(v)); }, true);
        compare_all("P(w)", [&](const List& v) { return P_open_fixed(ring_, Args<R>(v)); }, true);

        // families: one memo per argument order
        Families<R> fb(ring_, base), fi(ring_, inv);
        std::vector<std::pair<std::string, Families<R>>> fm;
        for (const auto& [mv, args] : moves) fm.emplace_back(mv, Families<R>(ring_, args));
        auto family = [&](const std::string& name, int lo, int hi, auto get) {
            for (int i = lo; i <= hi; ++i) {
                std::string label = name + std::to_string(i);
                T v = get(fb, i);
                for (auto& [mv, f] : fm) add(label + "@" + mv, v, get(f, i));
                add(label + "@invert", v, get(fi, i));
            }
        };
        family("eps", 0, 2 * L_, [](Families<R>& f, int i) { return f.eps(i); });
        family("nu", 1, 2 * L_, [](Families<R>& f, int i) { return f.nu(i); });
        family("lambda", 0, L_ - 1, [](Families<R>& f, int i) { return f.lam(i); });
    }

    void mu_reduction() {
        const auto& z = a_[static_cast<std::size_t>(L_ - 2)];
        List r = rest();
        auto m = build_matrix(ring_, MatrixKind::MU, Args<R>(plus(r, {-z, z})));
        auto red = row_column_reduce(ring_, m, z);
        Matrix<T> expect = r.empty() ? Matrix<T>() : build_matrix(ring_, MatrixKind::MU, Args<R>(r));
        if (expect.rows() != red.block.rows()) {
            add_error("block-shape", "reduced block is " + std::to_string(red.block.rows()) + "x" +
                                         std::to_string(red.block.rows()) + ", expected " + std::to_string(expect.rows()));
            return;
        }
        for (std::size_t i = 0; i < expect.rows(); ++i) {
            for (std::size_t j = 0; j < expect.cols(); ++j) {
                add("block" + std::to_string(i) + "," + std::to_string(j), expect(i, j), red.block(i, j));
            }
        }
        add("corner", Pp_gen(ring_, Args<R>(r), z), red.corner);
        // the rest of the last row must vanish
        for (std::size_t j = 0; j < red.last_row.size(); ++j) add("last-row" + std::to_string(j), ring_.zero(), red.last_row[j]);
        add("det-a", one(), det(ring_, reduce_left(ring_, m.rows(), z)));
        add("det-b", one(), det(ring_, reduce_right(ring_, m.rows(), z)));
    }

    const R& ring_;
    Args<R> a_;
    int L_;
    json& notes_;
    std::vector<Check<T>> out_;
};

template <ExactRing R>
std::vector<Check<typename R::value_type>> run_body(IdentityId id, int L, const R& ring,
                                                    std::vector<typename R::value_type>& args, json& notes,
                                                    const VerifyOptions& opts) {
    Body<R> body(ring, Args<R>(args), L, notes);
    auto checks = body.run(id);
    // planted corruption: one coefficient of the first right side moves by 1
    if (opts.corrupt && !checks.empty() && !args.empty()) checks[0].rhs = checks[0].rhs + args[0];
    return checks;
}

// ---- verdicts --------------------------------------------------------------

struct CheckOutcome {
    std::string label;
    bool informative = false;
    Verdict verdict = Verdict::EXACT;
    Cyclo constant{1};
    std::optional<EvalPoint> witness;
    std::optional<std::string> error;
};

json outcome_json(const CheckOutcome& c) {
    json j;
    j["label"] = c.label;
    j["verdict"] = to_string(c.verdict);
    if (c.verdict == Verdict::PROPORTIONAL) j["constant"] = to_json(c.constant);
    if (c.error) j["error"] = *c.error;
    return j;
}

void fold(VerificationReport& r, const std::vector<CheckOutcome>& outcomes) {
    r.verdict = Verdict::EXACT;
    r.constant = Cyclo(1);
    json checks = json::array(), info = json::array();
    for (const auto& c : outcomes) {
        if (c.informative) {
            info.push_back(outcome_json(c));
            continue;
        }
        if (c.verdict != Verdict::EXACT) checks.push_back(outcome_json(c));
        if (c.verdict == Verdict::FAIL) {
            if (r.verdict != Verdict::FAIL) {
                r.verdict = Verdict::FAIL;
                r.constant = Cyclo(1);
                r.witness = c.witness;
                r.details["failed_check"] = c.label;
            }
        } else if (c.verdict == Verdict::PROPORTIONAL && r.verdict == Verdict::EXACT) {
            r.verdict = Verdict::PROPORTIONAL;
            r.constant = c.constant;
        }
    }
    if (!checks.empty()) r.details["checks"] = checks;
    if (!info.empty()) r.details["informative"] = info;
}

std::vector<CheckOutcome> random_outcomes(IdentityId id, int L, const VerifyMode& mode, const VerifyOptions& opts,
                                          json& notes) {
    CycloRing ring;
    auto vars = identity_vars(id, L);
    Sampler sampler(mode.seed);
    const int trials = std::max(mode.trials, 1);
    std::vector<EvalPoint> points;
    std::vector<std::vector<Check<Cyclo>>> runs;
    int budget = 50 * trials + 100;
    while (static_cast<int>(runs.size()) < trials) {
        if (budget-- == 0) throw std::runtime_error("no regular evaluation point found for " + std::string(to_string(id)));
        std::vector<Cyclo> vals;
        for (std::size_t i = 0; i < vars->size(); ++i) vals.push_back(sampler.nonzero_cyclo());
        try {
            auto checks = run_body(id, L, ring, vals, notes, opts);
            runs.push_back(std::move(checks));
            points.push_back({vars, std::move(vals)});
        } catch (const DivisionByZero&) {
            // singular point: draw again
        }
    }

    std::vector<CheckOutcome> out;
    for (std::size_t k = 0; k < runs[0].size(); ++k) {
        CheckOutcome c{runs[0][k].label, runs[0][k].informative, Verdict::EXACT, Cyclo(1), std::nullopt, std::nullopt};
        auto fail_at = [&](std::size_t t) {
            c.verdict = Verdict::FAIL;
            c.witness = points[t];
        };
        std::optional<std::size_t> first_diff, first_nonzero;
        for (std::size_t t = 0; t < runs.size(); ++t) {
            const auto& ch = runs[t][k];
            if (!first_diff && ch.lhs != ch.rhs) first_diff = t;
            if (!first_nonzero && !ch.lhs.is_zero()) first_nonzero = t;
        }
        if (first_diff) {
            if (!first_nonzero || runs.size() < 2) {
                fail_at(*first_diff);
            } else {
                Cyclo ratio = runs[*first_nonzero][k].rhs / runs[*first_nonzero][k].lhs;
                if (ratio.is_zero()) {
                    fail_at(*first_nonzero);
                } else {
                    c.verdict = Verdict::PROPORTIONAL;
                    c.constant = ratio;
                    for (std::size_t t = 0; t < runs.size(); ++t) {
                        if (runs[t][k].rhs != ratio * runs[t][k].lhs) {
                            fail_at(t);
                            c.constant = Cyclo(1);
                            break;
                        }
                    }
                }
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckOutcome> symbolic_outcomes(IdentityId id, int L, const VerifyMode& mode, const VerifyOptions& opts,
                                            json& notes) {
    auto vars = identity_vars(id, L);
    PolyRing ring(vars);
    auto gens = ring.generators();
    std::vector<Check<LaurentPoly>> checks;
    try {
        checks = run_body(id, L, ring, gens, notes, opts);
    } catch (const DivisibilityFailure& e) {
        checks.push_back({"identity", ring.zero(), ring.zero(), false, std::string(e.what()), std::nullopt});
    }
    std::vector<CheckOutcome> out;
    bool need_witness = false;
    for (auto& ch : checks) {
        CheckOutcome c{ch.label, ch.informative, Verdict::EXACT, Cyclo(1), std::nullopt, ch.error};
        if (ch.error) {
            c.verdict = Verdict::FAIL;
            c.witness = ch.witness;
            need_witness = need_witness || !c.witness;
        } else {
            auto cmp = compare(ch.lhs, ch.rhs, mode.seed);
            if (cmp.kind == CompareResult::Kind::Proportional) {
                c.verdict = Verdict::PROPORTIONAL;
                c.constant = cmp.constant;
            } else if (cmp.kind == CompareResult::Kind::Distinct) {
                c.verdict = Verdict::FAIL;
                c.witness = cmp.witness;
            }
        }
        out.push_back(std::move(c));
    }
    if (need_witness) {
        // a polynomial that could not be formed: find where the identity breaks numerically
        json scratch = json::object();
        auto numeric = random_outcomes(id, L, VerifyMode::random(std::max(mode.trials, 20), mode.seed), opts, scratch);
        for (auto& c : out) {
            if (!c.error || c.witness) continue;
            for (const auto& n : numeric) {
                if ((n.label == c.label || c.label == "identity") && n.verdict == Verdict::FAIL) {
                    c.witness = n.witness;
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace

std::optional<std::string> size_rule_violation(IdentityId id, int L, const VerifyMode& mode,
                                               const VerifyOptions& opts) {
    const std::string name(to_string(id));
    if (L < min_size(id)) return name + " is stated for L >= " + std::to_string(min_size(id));
    const int ceiling = opts.ceiling.value_or(symbolic_ceiling(id));
    // the oracle side is symbolic in either mode
    const bool symbolic_work = mode.kind == VerifyMode::Kind::SYMBOLIC || id == IdentityId::ORACLE_MATCH;
    if (symbolic_work && L > ceiling) return name + ": symbolic work is limited to L <= " + std::to_string(ceiling);
    return std::nullopt;
}

VerificationReport verify(IdentityId id, int L, const VerifyMode& mode, const VerifyOptions& opts) {
    if (auto why = size_rule_violation(id, L, mode, opts)) throw SizeRuleError(*why);
    if (mode.kind == VerifyMode::Kind::RANDOM && mode.trials < 1) throw std::invalid_argument("random mode needs trials >= 1");

    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = id;
    r.L = L;
    r.mode = mode;
    json notes = json::object();
    auto outcomes = mode.kind == VerifyMode::Kind::SYMBOLIC ? symbolic_outcomes(id, L, mode, opts, notes)
                                                            : random_outcomes(id, L, mode, opts, notes);
    fold(r, outcomes);
    for (auto& [k, v] : notes.items()) r.details[k] = v;
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<VerificationReport> run_suite(const std::vector<VerifyTask>& tasks, const VerifyMode& mode,
                                          const VerifyOptions& opts, unsigned jobs) {
    std::vector<VerificationReport> out(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                out[i] = verify(tasks[i].id, tasks[i].L, mode, opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

json to_json(const VerificationReport& r, bool timing) {
    json j;
    j["id"] = to_string(r.id);
    j["L"] = r.L;
    j["mode"] = r.mode.kind == VerifyMode::Kind::SYMBOLIC ? "symbolic" : "random";
    if (r.mode.kind == VerifyMode::Kind::RANDOM) j["trials"] = r.mode.trials;
    j["seed"] = r.mode.seed;
    j["verdict"] = to_string(r.verdict);
    j["constant"] = to_json(r.constant);
    j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    j["millis"] = timing ? json(r.millis) : json(nullptr);
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}

}  // namespace dtlsum
