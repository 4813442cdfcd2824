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

#ifndef DTLSUM_LAURENT_HPP
#define DTLSUM_LAURENT_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtlsum/cyclo.hpp"

namespace dtlsum {

/// Largest number of variables a polynomial may carry.
inline constexpr std::size_t kMaxVars = 16;

/// Ordered list of distinct variable names. Positions define exponent slots.
///
/// Names are identifiers; "w" is reserved for the field generator in the
/// text format.
class VarSet {
  public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names);

    /// z1..zn, the default naming for size-n computations.
    static std::shared_ptr<const VarSet> numbered(int n, std::string_view prefix = "z");
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require(std::string_view name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

  private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

bool same_vars(const VarSetPtr& a, const VarSetPtr& b);

/// Exponent vector; slots past the VarSet size are zero.
struct Monomial {
    std::array<std::int16_t, kMaxVars> e{};

    Monomial& operator*=(const Monomial& o) {
        for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    Monomial inverse() const {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::int16_t>(-e[i]);
        return m;
    }
    bool is_one() const { return *this == Monomial{}; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse Laurent polynomial over Q(w).
///
/// Terms are kept sorted ascending in lexicographic exponent order with no
/// zero coefficients, so two polynomials over the same VarSet are equal iff
/// their term vectors are equal. Values are immutable once built.
class LaurentPoly {
  public:
    using Term = std::pair<Monomial, Cyclo>;

    LaurentPoly() : vars_(std::make_shared<const VarSet>()) {}
    explicit LaurentPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(VarSetPtr vars, const Cyclo& c);
    static LaurentPoly variable(VarSetPtr vars, std::string_view name);
    static LaurentPoly variable(VarSetPtr vars, std::size_t index);
    static LaurentPoly monomial(VarSetPtr vars, const Monomial& m, const Cyclo& c = Cyclo(1));
    /// Sorts, merges like monomials and drops zeros.
    static LaurentPoly from_terms(VarSetPtr vars, std::vector<Term> terms);

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Coefficient of the unit monomial.
    Cyclo constant_term() const;
    Cyclo coefficient(const Monomial& m) const;
    const Term& leading() const { return terms_.back(); }

    int min_exponent(std::size_t var) const;
    int max_exponent(std::size_t var) const;
    /// Largest exponent sum over the terms.
    int total_degree() const;
    bool depends_on(std::size_t var) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Cyclo& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Cyclo& c) { return a *= c; }
    friend LaurentPoly operator*(const Cyclo& c, LaurentPoly a) { return a *= c; }

    /// Structural equality; throws VarSetMismatch across different VarSets.
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    /// Inverse of a single-term polynomial; throws std::domain_error otherwise.
    LaurentPoly monomial_inverse() const;
    LaurentPoly pow(int k) const;

    /// Re-expresses the polynomial over another VarSet, matching by name.
    /// Every variable the polynomial depends on must exist in `target`.
    LaurentPoly rebase(VarSetPtr target) const;
    /// Reorders variable values: the exponent of variable i moves to slot perm[i].
    LaurentPoly permute_vars(std::span<const std::size_t> perm) const;

  private:
    VarSetPtr vars_;
    std::vector<Term> terms_;
};

/// Non-divisibility found by exact_divide; carries the remainder.
class DivisibilityFailure : public std::runtime_error {
  public:
    DivisibilityFailure(const std::string& what, LaurentPoly remainder)
        : std::runtime_error(what), remainder_(std::move(remainder)) {}
    const LaurentPoly& remainder() const { return remainder_; }

  private:
    LaurentPoly remainder_;
};

enum class PolyOp { Add, Sub, Mul };

LaurentPoly poly_arith(const LaurentPoly& p, const LaurentPoly& q, PolyOp op);

/// Image of a substitution: var -> c * target^e with e = +1 or -1.
struct SubstImage {
    Cyclo c;
    std::string target;
    int e = 1;
};

/// Replaces var^k by c^k * target^(e k). When target differs from var, var is
/// dropped from the VarSet; a fresh target is appended to it.
LaurentPoly substitute(const LaurentPoly& p, std::string_view var, const SubstImage& image);

/// Partial evaluation var -> value (nonzero).
LaurentPoly specialize(const LaurentPoly& p, std::string_view var, const Cyclo& value);

/// Values for every variable of a VarSet, all nonzero.
struct EvalPoint {
    VarSetPtr vars;
    std::vector<Cyclo> values;

    /// Throws std::invalid_argument when a value is missing or zero.
    void validate() const;
    std::string to_string() const;
};

Cyclo evaluate(const LaurentPoly& p, const EvalPoint& pt);

enum class RemainderMode {
    Full,   // finish the division and report the whole remainder
    Early,  // stop at the first proof of non-divisibility; partial remainder
};

/// q with q * den == num; throws DivisibilityFailure with the remainder of
/// lexicographic multivariate division when den does not divide num.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den, RemainderMode mode = RemainderMode::Full);

/// Coefficient of var^k, over the VarSet with var removed.
LaurentPoly coeff_in_var(const LaurentPoly& p, std::string_view var, int k);

struct CompareResult {
    enum class Kind { Equal, Proportional, Distinct };
    Kind kind = Kind::Equal;
    Cyclo constant{1};  // q = constant * p when Proportional
    std::optional<EvalPoint> witness;
};

/// Equality, proportionality q = c p, or a witness point where they differ.
/// The witness search is seeded and reproducible.
CompareResult compare(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t seed = 0);

/// Canonical text: descending term order, "(1 - 1w)*z1^-1*z2^2".
std::string to_text(const LaurentPoly& p);
/// Inverse of to_text; throws std::invalid_argument on malformed input.
LaurentPoly parse_text(std::string_view text, VarSetPtr vars);

}  // namespace dtlsum

#endif  // DTLSUM_LAURENT_HPP
