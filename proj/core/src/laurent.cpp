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

#include "dtlsum/laurent.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <climits>
#include <cstring>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "dtlsum/errors.hpp"
#include "dtlsum/sampling.hpp"

namespace dtlsum {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty() || s == "w") return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

void check_same(const LaurentPoly& p, const LaurentPoly& q) {
    if (!same_vars(p.vars(), q.vars())) throw VarSetMismatch("operands use different variable sets");
}

Cyclo cyclo_pow(const Cyclo& c, int k) {
    if (k < 0) return cyclo_pow(c.inverse(), -k);
    Cyclo r(1), b = c;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

std::int16_t narrow_exp(long v) {
    if (v > INT16_MAX || v < INT16_MIN) throw std::overflow_error("exponent out of range");
    return static_cast<std::int16_t>(v);
}

// Powers of one value over an exponent window, built lazily.
class PowerTable {
  public:
    PowerTable(const Cyclo& x, int lo, int hi) : lo_(lo) {
        pw_.resize(static_cast<std::size_t>(hi - lo + 1));
        Cyclo xi = lo < 0 ? x.inverse() : x;
        pw_[static_cast<std::size_t>(-lo >= 0 ? -lo : 0)] = Cyclo(1);
        // fill upward from 0 and downward from 0; window always contains 0
        for (int k = 1; k <= hi; ++k) pw_[idx(k)] = pw_[idx(k - 1)] * x;
        for (int k = -1; k >= lo; --k) pw_[idx(k)] = pw_[idx(k + 1)] * xi;
    }
    const Cyclo& at(int k) const { return pw_[idx(k)]; }

  private:
    std::size_t idx(int k) const { return static_cast<std::size_t>(k - lo_); }
    int lo_;
    std::vector<Cyclo> pw_;
};

std::vector<LaurentPoly::Term> to_sorted(std::unordered_map<Monomial, Cyclo, MonomialHash>& acc) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) out.emplace_back(m, std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

// Last variable most significant.
struct PrincipalLastLess {
    std::size_t n;
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (std::size_t i = n; i-- > 0;) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        }
        return false;
    }
};

}  // namespace

// ---- VarSet ---------------------------------------------------------------

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars) {
        throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
    }
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_name(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
}

VarSetPtr VarSet::numbered(int n, std::string_view prefix) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return make(std::move(names));
}

VarSetPtr VarSet::make(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t VarSet::require(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw VarSetMismatch("variable '" + std::string(name) + "' not in variable set");
    return *i;
}

bool same_vars(const VarSetPtr& a, const VarSetPtr& b) { return a == b || *a == *b; }

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::uint64_t w[4];
    static_assert(sizeof(w) == sizeof(m.e));
    std::memcpy(w, m.e.data(), sizeof(w));
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : w) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

// ---- construction -----------------------------------------------------------

LaurentPoly LaurentPoly::constant(VarSetPtr vars, const Cyclo& c) {
    LaurentPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
    return p;
}

LaurentPoly LaurentPoly::variable(VarSetPtr vars, std::string_view name) {
    std::size_t i = vars->require(name);
    return variable(std::move(vars), i);
}

LaurentPoly LaurentPoly::variable(VarSetPtr vars, std::size_t index) {
    if (index >= vars->size()) throw std::out_of_range("variable index out of range");
    Monomial m;
    m.e[index] = 1;
    return monomial(std::move(vars), m);
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vars, const Monomial& m, const Cyclo& c) {
    LaurentPoly p(std::move(vars));
    for (std::size_t i = p.vars_->size(); i < kMaxVars; ++i) {
        if (m.e[i] != 0) throw std::invalid_argument("monomial exponent outside the variable set");
    }
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(VarSetPtr vars, std::vector<Term> terms) {
    LaurentPoly p(std::move(vars));
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    for (auto& t : terms) {
        for (std::size_t i = p.vars_->size(); i < kMaxVars; ++i) {
            if (t.first.e[i] != 0) throw std::invalid_argument("monomial exponent outside the variable set");
        }
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

// ---- queries ----------------------------------------------------------------

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Cyclo LaurentPoly::constant_term() const { return coefficient(Monomial{}); }

Cyclo LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Cyclo(0);
}

int LaurentPoly::min_exponent(std::size_t var) const {
    int r = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        r = first ? m.e[var] : std::min<int>(r, m.e[var]);
        first = false;
    }
    return r;
}

int LaurentPoly::max_exponent(std::size_t var) const {
    int r = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        r = first ? m.e[var] : std::max<int>(r, m.e[var]);
        first = false;
    }
    return r;
}

int LaurentPoly::total_degree() const {
    int r = INT_MIN;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (std::size_t i = 0; i < vars_->size(); ++i) s += m.e[i];
        r = std::max(r, s);
    }
    return terms_.empty() ? 0 : r;
}

bool LaurentPoly::depends_on(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.e[var] != 0; });
}

// ---- arithmetic -------------------------------------------------------------

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(*this, o);
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            Cyclo s = i->second + j->second;
            if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Cyclo& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : terms_) t.second *= c;
    return *this;
}

namespace {

using wide = Rational::wide;

struct WideCyclo {
    wide a = 0, b = 0;
};

// Coefficients as (a, b) integers of at most 31 bits, or nothing.
std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> small_integral(const LaurentPoly& p) {
    constexpr std::int64_t lim = std::int64_t{1} << 31;
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        auto x = c.a().small_integer(), y = c.b().small_integer();
        if (!x || !y || *x >= lim || *x <= -lim || *y >= lim || *y <= -lim) return std::nullopt;
        out.emplace_back(*x, *y);
    }
    return out;
}

// Product of integral polynomials with exponents packed into one integer
// key, first variable most significant, so ascending keys are canonical order.
std::optional<std::vector<LaurentPoly::Term>> mul_integral(const LaurentPoly& a, const LaurentPoly& b) {
    const std::size_t n = a.vars()->size();
    auto ca = small_integral(a);
    if (!ca) return std::nullopt;
    auto cb = small_integral(b);
    if (!cb) return std::nullopt;

    std::array<int, kMaxVars> lo{}, span{};
    std::array<std::uint64_t, kMaxVars> stride{};
    std::uint64_t box = 1;
    for (std::size_t i = n; i-- > 0;) {
        lo[i] = a.min_exponent(i) + b.min_exponent(i);
        span[i] = a.max_exponent(i) + b.max_exponent(i) - lo[i] + 1;
        stride[i] = box;
        if (box > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(span[i])) return std::nullopt;
        box *= static_cast<std::uint64_t>(span[i]);
    }
    auto keys = [&](const LaurentPoly& p, const LaurentPoly& other) {
        std::vector<std::uint64_t> k;
        k.reserve(p.size());
        for (const auto& [m, c] : p.terms()) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < n; ++i) {
                // offsets of the two factors add up to the product offset
                int base = lo[i] - other.min_exponent(i);
                key += static_cast<std::uint64_t>(m.e[i] - base) * stride[i];
            }
            k.push_back(key);
        }
        return k;
    };
    const auto ka = keys(a, b), kb = keys(b, a);
    const bool real = std::all_of(ca->begin(), ca->end(), [](const auto& c) { return c.second == 0; }) &&
                      std::all_of(cb->begin(), cb->end(), [](const auto& c) { return c.second == 0; });

    auto emit = [&](std::uint64_t key, const WideCyclo& v, std::vector<LaurentPoly::Term>& out) {
        if (v.a == 0 && v.b == 0) return;
        Monomial m;
        for (std::size_t i = 0; i < n; ++i)
            m.e[i] = static_cast<std::int16_t>(lo[i] + static_cast<int>((key / stride[i]) % static_cast<std::uint64_t>(span[i])));
        out.emplace_back(m, Cyclo(Rational::from_wide(v.a), Rational::from_wide(v.b)));
    };
    auto accumulate = [&](auto&& cell) {
        for (std::size_t i = 0; i < ka.size(); ++i) {
            const auto [x1, y1] = (*ca)[i];
            for (std::size_t j = 0; j < kb.size(); ++j) {
                const auto [x2, y2] = (*cb)[j];
                WideCyclo& v = cell(ka[i] + kb[j]);
                if (real) {
                    v.a += static_cast<wide>(x1) * x2;
                } else {
                    // (x1 + y1 w)(x2 + y2 w) = x1 x2 - y1 y2 + (x1 y2 + y1 x2 + y1 y2) w
                    wide yy = static_cast<wide>(y1) * y2;
                    v.a += static_cast<wide>(x1) * x2 - yy;
                    v.b += static_cast<wide>(x1) * y2 + static_cast<wide>(y1) * x2 + yy;
                }
            }
        }
    };

    std::vector<LaurentPoly::Term> out;
    constexpr std::uint64_t kDenseCells = std::uint64_t{1} << 21;
    if (box <= kDenseCells && box <= 64 * ka.size() * kb.size()) {
        std::vector<WideCyclo> dense(box);
        accumulate([&](std::uint64_t k) -> WideCyclo& { return dense[k]; });
        for (std::uint64_t k = 0; k < box; ++k) emit(k, dense[k], out);
        return out;
    }
    std::unordered_map<std::uint64_t, WideCyclo> acc;
    acc.reserve(std::min<std::size_t>(ka.size() * kb.size(), std::size_t{1} << 24));
    accumulate([&](std::uint64_t k) -> WideCyclo& { return acc[k]; });
    std::vector<std::pair<std::uint64_t, WideCyclo>> sorted(acc.begin(), acc.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [k, v] : sorted) emit(k, v, out);
    return out;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same(a, b);
    LaurentPoly r(a.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    // a single term shifts every monomial by the same amount; order is kept
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const auto& one = a.terms_.size() == 1 ? a : b;
        const auto& many = a.terms_.size() == 1 ? b : a;
        const auto& [m0, c0] = one.terms_[0];
        r.terms_.reserve(many.terms_.size());
        for (const auto& [m, c] : many.terms_) r.terms_.emplace_back(m * m0, c * c0);
        return r;
    }
    if (a.terms_.size() * b.terms_.size() >= 64) {
        if (auto fast = mul_integral(a, b)) {
            r.terms_ = std::move(*fast);
            return r;
        }
    }
    std::unordered_map<Monomial, Cyclo, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [it, fresh] = acc.try_emplace(ma * mb, ca);
            if (fresh) {
                it->second *= cb;
            } else {
                it->second += ca * cb;
            }
        }
    }
    r.terms_ = to_sorted(acc);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    check_same(a, b);
    return a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
    if (terms_.size() != 1) throw std::domain_error("only single-term polynomials are invertible");
    return monomial(vars_, terms_[0].first.inverse(), terms_[0].second.inverse());
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) return monomial_inverse().pow(-k);
    LaurentPoly r = constant(vars_, Cyclo(1));
    LaurentPoly b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k > 0) b *= b;
    }
    return r;
}

LaurentPoly LaurentPoly::rebase(VarSetPtr target) const {
    std::vector<std::optional<std::size_t>> map(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        map[i] = target->index_of(vars_->name(i));
        if (!map[i] && depends_on(i)) {
            throw VarSetMismatch("variable '" + vars_->name(i) + "' missing from target variable set");
        }
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            if (map[i]) nm.e[*map[i]] = m.e[i];
        }
        out.emplace_back(nm, c);
    }
    return from_terms(std::move(target), std::move(out));
}

LaurentPoly LaurentPoly::permute_vars(std::span<const std::size_t> perm) const {
    const std::size_t n = vars_->size();
    if (perm.size() != n) throw std::invalid_argument("permutation size does not match variable count");
    std::vector<bool> hit(n, false);
    for (auto p : perm) {
        if (p >= n || hit[p]) throw std::invalid_argument("not a permutation");
        hit[p] = true;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        for (std::size_t i = 0; i < n; ++i) nm.e[perm[i]] = m.e[i];
        out.emplace_back(nm, c);
    }
    return from_terms(vars_, std::move(out));
}

LaurentPoly poly_arith(const LaurentPoly& p, const LaurentPoly& q, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return p + q;
        case PolyOp::Sub: return p - q;
        case PolyOp::Mul: return p * q;
    }
    throw std::invalid_argument("unknown operation");
}

// ---- substitution and evaluation ------------------------------------------

LaurentPoly substitute(const LaurentPoly& p, std::string_view var, const SubstImage& image) {
    if (image.c.is_zero()) throw std::invalid_argument("substitution coefficient must be nonzero");
    if (image.e != 1 && image.e != -1) throw std::invalid_argument("substitution exponent must be +1 or -1");
    if (!valid_name(image.target)) throw std::invalid_argument("invalid target name '" + image.target + "'");
    const VarSet& vs = *p.vars();
    const std::size_t vi = vs.require(var);

    VarSetPtr out_vars = p.vars();
    std::vector<std::size_t> slot(vs.size());  // old index -> new index
    std::size_t target_slot = vi;
    if (image.target != var) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i != vi) {
                slot[i] = names.size();
                names.push_back(vs.name(i));
            }
        }
        auto t = std::find(names.begin(), names.end(), image.target);
        if (t == names.end()) {
            target_slot = names.size();
            names.push_back(image.target);
        } else {
            target_slot = static_cast<std::size_t>(t - names.begin());
        }
        out_vars = VarSet::make(std::move(names));
    } else {
        for (std::size_t i = 0; i < vs.size(); ++i) slot[i] = i;
    }

    std::map<int, Cyclo> cpow;
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        int k = m.e[vi];
        Monomial nm;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i != vi) nm.e[slot[i]] = m.e[i];
        }
        nm.e[target_slot] = narrow_exp(static_cast<long>(nm.e[target_slot]) + static_cast<long>(image.e) * k);
        auto it = cpow.find(k);
        if (it == cpow.end()) it = cpow.emplace(k, cyclo_pow(image.c, k)).first;
        out.emplace_back(nm, c * it->second);
    }
    return LaurentPoly::from_terms(std::move(out_vars), std::move(out));
}

LaurentPoly specialize(const LaurentPoly& p, std::string_view var, const Cyclo& value) {
    if (value.is_zero()) throw std::invalid_argument("specialization value must be nonzero");
    const VarSet& vs = *p.vars();
    const std::size_t vi = vs.require(var);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i != vi) names.push_back(vs.name(i));
    }
    std::map<int, Cyclo> vpow;
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        int k = m.e[vi];
        Monomial nm;
        for (std::size_t i = 0, j = 0; i < vs.size(); ++i) {
            if (i != vi) nm.e[j++] = m.e[i];
        }
        auto it = vpow.find(k);
        if (it == vpow.end()) it = vpow.emplace(k, cyclo_pow(value, k)).first;
        out.emplace_back(nm, c * it->second);
    }
    return LaurentPoly::from_terms(VarSet::make(std::move(names)), std::move(out));
}

void EvalPoint::validate() const {
    if (!vars || values.size() != vars->size()) throw std::invalid_argument("evaluation point does not cover the variable set");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_zero()) throw std::invalid_argument("evaluation point assigns zero to '" + vars->name(i) + "'");
    }
}

std::string EvalPoint::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ", ";
        s += vars->name(i) + ": " + values[i].to_string();
    }
    return s + "}";
}

Cyclo evaluate(const LaurentPoly& p, const EvalPoint& pt) {
    pt.validate();
    if (!same_vars(p.vars(), pt.vars)) throw VarSetMismatch("evaluation point uses a different variable set");
    if (p.is_zero()) return Cyclo(0);
    const std::size_t n = p.vars()->size();
    std::vector<PowerTable> tables;
    tables.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        tables.emplace_back(pt.values[i], std::min(0, p.min_exponent(i)), std::max(0, p.max_exponent(i)));
    }
    Cyclo sum(0);
    for (const auto& [m, c] : p.terms()) {
        Cyclo t = c;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.e[i] != 0) t *= tables[i].at(m.e[i]);
        }
        sum += t;
    }
    return sum;
}

// ---- division ---------------------------------------------------------------

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den, RemainderMode mode) {
    check_same(num, den);
    if (den.is_zero()) throw DivisionByZero();
    const VarSetPtr& vars = num.vars();
    const std::size_t n = vars->size();
    if (num.is_zero()) return LaurentPoly(vars);
    if (den.is_monomial()) return num * den.monomial_inverse();

    // shift both into the polynomial ring
    Monomial snum, sden;
    for (std::size_t i = 0; i < n; ++i) {
        snum.e[i] = narrow_exp(-num.min_exponent(i));
        sden.e[i] = narrow_exp(-den.min_exponent(i));
    }
    PrincipalLastLess less{n};
    std::vector<LaurentPoly::Term> d;
    d.reserve(den.size());
    for (const auto& [m, c] : den.terms()) d.emplace_back(m * sden, c);
    std::sort(d.begin(), d.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
    const Monomial dlead = d.back().first;
    const Cyclo dinv = d.back().second.inverse();

    std::map<Monomial, Cyclo, PrincipalLastLess> rem(less);
    for (const auto& [m, c] : num.terms()) rem.emplace(m * snum, c);

    // an exact quotient stays inside these exponent ranges
    Monomial qlo, qhi;
    for (std::size_t i = 0; i < n; ++i) {
        qlo.e[i] = narrow_exp(num.min_exponent(i) - den.min_exponent(i));
        qhi.e[i] = narrow_exp(num.max_exponent(i) - den.max_exponent(i));
    }
    const Monomial back = snum.inverse();
    auto stop_early = [&](std::vector<LaurentPoly::Term> left) {
        for (auto& [m, c] : rem) left.emplace_back(m, c);
        for (auto& t : left) t.first *= back;
        throw DivisibilityFailure("exact division cannot succeed (stopped at the first obstruction)",
                                  LaurentPoly::from_terms(vars, std::move(left)));
    };

    std::vector<LaurentPoly::Term> quot, left;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        Monomial lm = top->first;
        bool divides = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (lm.e[i] < dlead.e[i]) {
                divides = false;
                break;
            }
        }
        if (!divides) {
            if (mode == RemainderMode::Early) stop_early(std::move(left));
            left.emplace_back(lm, std::move(top->second));
            rem.erase(top);
            continue;
        }
        Monomial qm = lm * dlead.inverse();
        if (mode == RemainderMode::Early) {
            Monomial shifted = qm * sden * back;
            for (std::size_t i = 0; i < n; ++i) {
                if (shifted.e[i] < qlo.e[i] || shifted.e[i] > qhi.e[i]) stop_early(std::move(left));
            }
        }
        Cyclo qc = top->second * dinv;
        rem.erase(top);
        for (std::size_t k = 0; k + 1 < d.size(); ++k) {
            Cyclo delta = qc * d[k].second;
            auto [it, fresh] = rem.try_emplace(d[k].first * qm, Cyclo(0));
            it->second -= delta;
            if (it->second.is_zero()) rem.erase(it);
        }
        quot.emplace_back(qm, std::move(qc));
    }
    if (!left.empty()) {
        // report the remainder in the caller's exponents
        for (auto& t : left) t.first *= back;
        std::string what = "exact division left a nonzero remainder (" + std::to_string(left.size()) + " terms)";
        throw DivisibilityFailure(what, LaurentPoly::from_terms(vars, std::move(left)));
    }
    for (auto& t : quot) t.first *= sden * back;
    return LaurentPoly::from_terms(vars, std::move(quot));
}

LaurentPoly coeff_in_var(const LaurentPoly& p, std::string_view var, int k) {
    const VarSet& vs = *p.vars();
    const std::size_t vi = vs.require(var);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i != vi) names.push_back(vs.name(i));
    }
    std::vector<LaurentPoly::Term> out;
    for (const auto& [m, c] : p.terms()) {
        if (m.e[vi] != k) continue;
        Monomial nm;
        for (std::size_t i = 0, j = 0; i < vs.size(); ++i) {
            if (i != vi) nm.e[j++] = m.e[i];
        }
        out.emplace_back(nm, c);
    }
    return LaurentPoly::from_terms(VarSet::make(std::move(names)), std::move(out));
}

// ---- comparison -------------------------------------------------------------

CompareResult compare(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t seed) {
    check_same(p, q);
    CompareResult r;
    if (p.terms() == q.terms()) return r;
    if (!p.is_zero() && !q.is_zero() && p.size() == q.size()) {
        Cyclo c = q.terms()[0].second / p.terms()[0].second;
        bool prop = true;
        for (std::size_t i = 0; i < p.size() && prop; ++i) {
            prop = p.terms()[i].first == q.terms()[i].first && p.terms()[i].second * c == q.terms()[i].second;
        }
        if (prop) {
            r.kind = CompareResult::Kind::Proportional;
            r.constant = c;
            return r;
        }
    }
    r.kind = CompareResult::Kind::Distinct;
    Sampler s(seed);
    const std::size_t n = p.vars()->size();
    for (int attempt = 0; attempt < 256; ++attempt) {
        EvalPoint pt{p.vars(), {}};
        for (std::size_t i = 0; i < n; ++i) pt.values.push_back(s.nonzero_cyclo());
        if (evaluate(p, pt) != evaluate(q, pt)) {
            r.witness = std::move(pt);
            return r;
        }
    }
    return r;
}

// ---- text -------------------------------------------------------------------

std::string to_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string vars;
        for (std::size_t i = 0; i < p.vars()->size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += p.vars()->name(i);
            if (m.e[i] != 1) vars += '^' + std::to_string(m.e[i]);
        }
        std::string term;
        if (vars.empty()) {
            term = c.to_string();
        } else if (c.is_one()) {
            term = vars;
        } else if (c == Cyclo(-1)) {
            term = "-" + vars;
        } else {
            term = c.to_string() + "*" + vars;
        }
        if (first) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
        first = false;
    }
    return out;
}

namespace {

LaurentPoly::Term parse_term(std::string_view s, const VarSet& vs, bool negate) {
    auto fail = [&] { return std::invalid_argument("malformed term '" + std::string(s) + "'"); };
    if (s.empty()) throw fail();
    Cyclo c(1);
    Monomial m;
    std::string_view rest = s;
    if (rest[0] == '-' && rest.size() > 1 && (std::isalpha(static_cast<unsigned char>(rest[1])) || rest[1] == '_')) {
        c = Cyclo(-1);
        rest.remove_prefix(1);
    }
    bool first = true;
    while (!rest.empty()) {
        std::size_t star = rest.find('*');
        std::string_view f = rest.substr(0, star);
        rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
        if (star != std::string_view::npos && rest.empty()) throw fail();
        if (f.empty()) throw fail();
        if (std::isalpha(static_cast<unsigned char>(f[0])) || f[0] == '_') {
            std::size_t caret = f.find('^');
            std::string_view name = f.substr(0, caret);
            if (name == "w") throw fail();
            int e = 1;
            if (caret != std::string_view::npos) {
                std::string_view es = f.substr(caret + 1);
                auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), e);
                if (ec != std::errc() || ptr != es.data() + es.size() || e == 0) throw fail();
            }
            auto idx = vs.index_of(name);
            if (!idx) throw VarSetMismatch("unknown variable '" + std::string(name) + "'");
            m.e[*idx] = narrow_exp(static_cast<long>(m.e[*idx]) + e);
        } else {
            if (!first) throw fail();
            c *= Cyclo::parse(f);
        }
        first = false;
    }
    if (negate) c = -c;
    return {m, c};
}

}  // namespace

LaurentPoly parse_text(std::string_view text, VarSetPtr vars) {
    std::vector<LaurentPoly::Term> terms;
    int depth = 0;
    std::size_t start = 0;
    bool negate = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth < 0) throw std::invalid_argument("unbalanced parentheses");
        if (depth == 0 && i + 2 < text.size() && ch == ' ' && (text[i + 1] == '+' || text[i + 1] == '-') &&
            text[i + 2] == ' ') {
            terms.push_back(parse_term(text.substr(start, i - start), *vars, negate));
            negate = text[i + 1] == '-';
            start = i + 3;
            i += 2;
        }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses");
    std::string_view last = text.substr(start);
    if (terms.empty() && last == "0") return LaurentPoly(vars);
    terms.push_back(parse_term(last, *vars, negate));
    return LaurentPoly::from_terms(std::move(vars), std::move(terms));
}

}  // namespace dtlsum
