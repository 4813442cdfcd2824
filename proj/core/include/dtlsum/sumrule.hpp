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

#ifndef DTLSUM_SUMRULE_HPP
#define DTLSUM_SUMRULE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtlsum/polymatrix.hpp"
#include "dtlsum/symfunc.hpp"

namespace dtlsum {

enum class Method { DET_E, DET_MU, V_OVER_PP, W_OVER_P, DET_NU, DET_LAMBDA, ORACLE_INTERP };
enum class Model { PERIODIC, OPEN };

std::string_view to_string(Method m);
std::string_view to_string(Model m);
std::optional<Method> parse_method(std::string_view name);
std::optional<Model> parse_model(std::string_view name);
Model model_of(Method m);
/// Determinant routes of one model, reference first.
const std::vector<Method>& methods_of(Model model);
/// DET_E or DET_LAMBDA.
Method reference_method(Model model);

struct SumRuleResult {
    LaurentPoly value;
    Method method = Method::DET_E;
    VarSetPtr vars;
    /// value = normalization * reference value.
    Cyclo normalization{1};
};

/// A computed value broke permutation or inversion symmetry.
class InvariantViolation : public std::logic_error {
  public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Two routes that should agree up to a constant do not.
class MethodMismatch : public std::runtime_error {
  public:
    MethodMismatch(const std::string& what, std::optional<EvalPoint> witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}
    const std::optional<EvalPoint>& witness() const { return witness_; }

  private:
    std::optional<EvalPoint> witness_;
};

/// Surplus interpolation point disagrees with the fitted polynomial.
class OracleInconsistency : public std::runtime_error {
  public:
    OracleInconsistency(const std::string& what, LaurentPoly expected, LaurentPoly fitted)
        : std::runtime_error(what), expected_(std::move(expected)), fitted_(std::move(fitted)) {}
    const LaurentPoly& expected() const { return expected_; }
    const LaurentPoly& fitted() const { return fitted_; }

  private:
    LaurentPoly expected_, fitted_;
};

/// Periodic sum rule by a determinant route; the empty list gives 1.
template <ExactRing R>
typename R::value_type zp_value(const R& ring, Method method, Args<R> args) {
    if (args.empty()) return ring.one();
    Families<R> f(ring, {args.begin(), args.end()});
    switch (method) {
        case Method::DET_E: return det(ring, build_matrix(f, MatrixKind::E_STAIRCASE));
        case Method::DET_MU: return det(ring, build_matrix(f, MatrixKind::MU));
        default: throw std::invalid_argument("not a periodic method: " + std::string(to_string(method)));
    }
}

/// Open sum rule by a determinant route; the empty list gives 1.
/// Ratio routes divide exactly and raise DivisibilityFailure otherwise.
template <ExactRing R>
typename R::value_type z_open_value(const R& ring, Method method, Args<R> args) {
    if (args.empty()) return ring.one();
    Families<R> f(ring, {args.begin(), args.end()});
    const Cyclo half(Rational(1, 2));
    switch (method) {
        case Method::V_OVER_PP:
            return ring.divide(det(ring, build_matrix(f, MatrixKind::V_MINUS)), Pp_fixed(ring, args));
        case Method::W_OVER_P:
            return ring.divide(det(ring, build_matrix(f, MatrixKind::W_PLUS)) * half, P_open_fixed(ring, args));
        case Method::DET_NU: {
            auto d = det(ring, build_matrix(f, MatrixKind::NU_DIFF));
            if (f.size() % 2 == 0) d = ring.divide(d, P_open_fixed(ring, args));
            return d;
        }
        case Method::DET_LAMBDA: return det(ring, build_matrix(f, MatrixKind::LAMBDA_DIFF));
        default: throw std::invalid_argument("not an open method: " + std::string(to_string(method)));
    }
}

template <ExactRing R>
typename R::value_type sum_rule_value(const R& ring, Method method, Args<R> args) {
    return model_of(method) == Model::PERIODIC ? zp_value(ring, method, args) : z_open_value(ring, method, args);
}

/// V_L, the (1/2)-scaled W_L and the doubled-eps determinant.
template <ExactRing R>
typename R::value_type v_value(const R& ring, Args<R> args) {
    if (args.empty()) return ring.one();
    return det(ring, build_matrix(ring, MatrixKind::V_MINUS, args));
}

template <ExactRing R>
typename R::value_type w_value(const R& ring, Args<R> args) {
    const Cyclo half(Rational(1, 2));
    if (args.empty()) return ring.constant(half);
    return det(ring, build_matrix(ring, MatrixKind::W_PLUS, args)) * half;
}

template <ExactRing R>
typename R::value_type ztilde_value(const R& ring, Args<R> args) {
    if (args.empty()) return ring.one();
    return det(ring, build_matrix(ring, MatrixKind::EPS_DOUBLED, args));
}

/// Symmetric under swaps and cycles; with `inversion`, also under z1 -> 1/z1.
/// Throws InvariantViolation naming the broken symmetry.
void assert_invariants(const LaurentPoly& p, bool inversion, std::string_view what);

/// Periodic sum rule by DET_E or DET_MU. With `normalize`, the constant
/// against DET_E is computed (MethodMismatch if not proportional).
SumRuleResult zp_compute(const VarSetPtr& vars, Method method, bool normalize = true);

/// Open sum rule by any of the four open routes, normalized against DET_LAMBDA.
SumRuleResult z_open_compute(const VarSetPtr& vars, Method method, bool normalize = true);

/// Rebuilds the sum rule from its first recurrence alone, by interpolation in
/// the last variable. L counts every variable of the list.
SumRuleResult oracle_interpolate(Model model, int L, bool normalize = true);

/// Largest degree scanned before the oracle gives up.
inline constexpr int kOracleMaxDegree = 24;

}  // namespace dtlsum

#endif  // DTLSUM_SUMRULE_HPP
