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

#ifndef DTLSUM_VERIFY_HPP
#define DTLSUM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtlsum/serialize.hpp"
#include "dtlsum/sumrule.hpp"

namespace dtlsum {

enum class IdentityId {
    REC1P,
    REC2P,
    RECZ,
    REC2_OPEN,
    PMREC,
    PPMREC,
    PREC1,
    MUREC,
    RECP,
    GENVAR,
    GENMU,
    EPS_CONV,
    ZTILDE_VW,
    ZTILDE_REC,
    CROSS_PERIODIC,
    CROSS_OPEN,
    ORACLE_MATCH,
    SYMMETRY,
    MU_REDUCTION,
    VREC,
    WREC,
};

enum class Suite { PERIODIC, OPEN, ALL };

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<IdentityId>& all_identities();
std::optional<Suite> parse_suite(std::string_view name);
std::vector<IdentityId> suite_identities(Suite suite);

/// Smallest size an identity is stated for.
int min_size(IdentityId id);
/// Default symbolic ceiling: 6 for periodic identities, 5 otherwise.
int symbolic_ceiling(IdentityId id);
/// Free variables of the identity at size L.
VarSetPtr identity_vars(IdentityId id, int L);

struct VerifyMode {
    enum class Kind { SYMBOLIC, RANDOM };
    Kind kind = Kind::SYMBOLIC;
    int trials = 0;
    std::uint64_t seed = 0;

    static VerifyMode symbolic(std::uint64_t seed = 0) { return {Kind::SYMBOLIC, 0, seed}; }
    static VerifyMode random(int trials, std::uint64_t seed) { return {Kind::RANDOM, trials, seed}; }
};

struct VerifyOptions {
    /// Overrides symbolic_ceiling(id) when set.
    std::optional<int> ceiling;
    /// Adds 1 * (first free variable) to the right side of the first check.
    bool corrupt = false;
};

enum class Verdict { EXACT, PROPORTIONAL, FAIL };

std::string_view to_string(Verdict v);

struct VerificationReport {
    IdentityId id = IdentityId::REC1P;
    int L = 0;
    VerifyMode mode;
    Verdict verdict = Verdict::EXACT;
    /// rhs = constant * lhs; 1 unless PROPORTIONAL.
    Cyclo constant{1};
    std::optional<EvalPoint> witness;
    double millis = 0;
    /// Non-exact checks, errors and identity-specific notes.
    json details = json::object();

    bool passed() const { return verdict != Verdict::FAIL; }
};

/// Why (id, L) cannot run in this mode, or nothing when it can.
std::optional<std::string> size_rule_violation(IdentityId id, int L, const VerifyMode& mode,
                                               const VerifyOptions& opts = {});

/// Checks one identity at one size. Throws SizeRuleError when L is below
/// min_size or above the symbolic ceiling (ORACLE_MATCH: in both modes, the
/// oracle being symbolic); every mathematical outcome,
/// including a failed division, is a verdict.
VerificationReport verify(IdentityId id, int L, const VerifyMode& mode, const VerifyOptions& opts = {});

struct VerifyTask {
    IdentityId id;
    int L;
};

/// Runs tasks on `jobs` threads; reports come back in task order.
std::vector<VerificationReport> run_suite(const std::vector<VerifyTask>& tasks, const VerifyMode& mode,
                                          const VerifyOptions& opts = {}, unsigned jobs = 1);

/// {id, L, mode, seed, verdict, constant, witness, millis}; millis is null
/// unless `timing`.
json to_json(const VerificationReport& r, bool timing = false);

}  // namespace dtlsum

#endif  // DTLSUM_VERIFY_HPP
