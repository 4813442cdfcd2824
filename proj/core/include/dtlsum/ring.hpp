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

#ifndef DTLSUM_RING_HPP
#define DTLSUM_RING_HPP

#include <concepts>
#include <span>
#include <vector>

#include "dtlsum/cyclo.hpp"
#include "dtlsum/laurent.hpp"

namespace dtlsum {

// Formulas are written once against this interface and run either
// symbolically (PolyRing) or at a numeric point (CycloRing).
template <class R>
concept ExactRing = requires(const R& r, const typename R::value_type& x, const Cyclo& c) {
    { r.constant(c) } -> std::same_as<typename R::value_type>;
    { r.divide(x, x) } -> std::same_as<typename R::value_type>;
    { r.inv(x) } -> std::same_as<typename R::value_type>;
    { r.is_zero(x) } -> std::same_as<bool>;
    { x + x } -> std::convertible_to<typename R::value_type>;
    { x - x } -> std::convertible_to<typename R::value_type>;
    { x * x } -> std::convertible_to<typename R::value_type>;
    { x * c } -> std::convertible_to<typename R::value_type>;
    { -x } -> std::convertible_to<typename R::value_type>;
};

template <class R>
using Args = std::span<const typename R::value_type>;

/// Q(w) itself; evaluation mode.
struct CycloRing {
    using value_type = Cyclo;

    Cyclo constant(const Cyclo& c) const { return c; }
    Cyclo zero() const { return Cyclo(0); }
    Cyclo one() const { return Cyclo(1); }
    /// Throws DivisionByZero.
    Cyclo divide(const Cyclo& a, const Cyclo& b) const { return a / b; }
    Cyclo inv(const Cyclo& x) const { return x.inverse(); }
    bool is_zero(const Cyclo& x) const { return x.is_zero(); }
};

/// Laurent polynomials over a fixed VarSet; symbolic mode.
class PolyRing {
  public:
    using value_type = LaurentPoly;

    explicit PolyRing(VarSetPtr vars) : vars_(std::move(vars)) {}

    const VarSetPtr& vars() const { return vars_; }
    LaurentPoly constant(const Cyclo& c) const { return LaurentPoly::constant(vars_, c); }
    LaurentPoly zero() const { return LaurentPoly(vars_); }
    LaurentPoly one() const { return constant(Cyclo(1)); }
    LaurentPoly gen(std::size_t i) const { return LaurentPoly::variable(vars_, i); }
    LaurentPoly gen(std::string_view name) const { return LaurentPoly::variable(vars_, name); }
    std::vector<LaurentPoly> generators() const {
        std::vector<LaurentPoly> g;
        for (std::size_t i = 0; i < vars_->size(); ++i) g.push_back(gen(i));
        return g;
    }
    /// Exact; throws DivisibilityFailure as soon as the division cannot succeed.
    LaurentPoly divide(const LaurentPoly& a, const LaurentPoly& b) const {
        return exact_divide(a, b, RemainderMode::Early);
    }
    /// Units only: single-term polynomials.
    LaurentPoly inv(const LaurentPoly& x) const { return x.monomial_inverse(); }
    bool is_zero(const LaurentPoly& x) const { return x.is_zero(); }

  private:
    VarSetPtr vars_;
};

static_assert(ExactRing<CycloRing>);
static_assert(ExactRing<PolyRing>);

}  // namespace dtlsum

#endif  // DTLSUM_RING_HPP
