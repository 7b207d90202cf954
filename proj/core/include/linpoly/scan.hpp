/*
   Copyright 2026 linpoly contributors

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

#ifndef LINPOLY_SCAN_HPP
#define LINPOLY_SCAN_HPP

#include "linpoly/report.hpp"
#include "linpoly/symmod.hpp"

namespace linpoly {

/**
 * Monic q-polynomials of q-degree n over F with a_0 != 0 whose ordinary
 * quotient L(x)/x is irreducible over F (and, when `require_not_qs`, with no
 * q^s-structure for s > 1; over F = GF(q) that is automatic).  Small
 * coefficient spaces are enumerated exhaustively in canonical order and
 * truncated to `limit`; larger spaces are sampled with the given seed.
 * Returns fewer than `limit` only when the space is exhausted.
 */
std::vector<LinPolyF> irreducible_m_instances(const FieldCtx& F, u64 q, u32 n, u64 limit, u64 seed,
                                              bool require_not_qs = true);

/// For n = 2 and L = x^(q^2) + a x^q + b x, the explicit degree-(q+1) form
/// x2^(q+1) + a x1^q x2 + b x1^(q+1) that evaluates to zero on the special
/// basis; coefficients over GF(q), indexed by `basis` (degree q+1, n = 2).
std::vector<FFElem> expected_top_kernel_form(const LinPolyF& L, const MonomialBasis& basis,
                                             const FieldCtx& Fq);

/// Exhaustive spin probe of the degree-r form space in two variables under
/// generators of GL(2, p).
struct FormSpaceProbe {
    u64 p = 0;
    u64 r = 0;
    u32 dim = 0;
    SpinResult spin;
    bool irreducible = false;
};
FormSpaceProbe probe_form_space_irreducibility(u64 p, u64 r);

/// Kernel stability under the Frobenius action: every kernel vector of the
/// evaluation map stays inside the kernel span when acted on by the
/// Frobenius matrix.
bool kernel_frobenius_stable(const RootSpace& rs, const EvalMapReport& eval);

// ---------------------------------------------------------------------------
// conjecture scan

struct ScanConfig {
    u64 q = 2;
    u32 n = 2;
    u32 ext = 1;  // coefficient field GF(q^ext)
    u64 instances = 100;
    bool exhaustive = false;
    Caps caps;
    u64 seed = kDefaultSeed;
    u32 jobs = 1;
};

struct CounterexampleCert {
    std::string field;
    std::string L_text;
    u64 q = 0;
    u32 n = 0;
    u64 r = 0;
    std::vector<std::string> kernel_forms;
};

struct ScanTally {
    u64 r = 0;
    bool control = false;  // r = q and r = q + 1 rows
    u64 injective = 0;
    u64 noninjective = 0;
};

struct ScanSummary {
    ScanConfig cfg;
    std::string field;
    u64 tested = 0;
    u64 skipped = 0;  // enumerated/sampled candidates failing the hypotheses
    std::vector<ScanTally> tallies;
    std::vector<CounterexampleCert> counterexamples;
    bool any_counterexample() const { return !counterexamples.empty(); }
    ojson to_json() const;
};

/// Scan the injectivity conjecture: for each instance, evaluation-map
/// injectivity for r = 1..q-1, plus the control rows r = q and r = q+1.
/// Any non-injectivity inside the conjecture range becomes a certificate.
ScanSummary scan_conjecture(const ScanConfig& cfg);

// ---------------------------------------------------------------------------
// verification suite (CLI front end for the standing checks)

struct SuiteCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<SuiteCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

SuiteResult run_verify_suite(bool full, const Caps& caps, u64 seed);

}  // namespace linpoly

#endif
