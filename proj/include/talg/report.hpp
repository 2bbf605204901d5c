/**
 * Report builders: each CLI subcommand is backed by a JSON report built
 * here, with a matching plain-text rendering.
 *
 * Reports compare computed results against the published reference values
 * wherever those exist.  Agreement is recorded as `true`; any mismatch is
 * recorded as a human-readable discrepancy note with the computed value as
 * ground truth.  The `paperAgrees` maps never silence a disagreement.
 */
#ifndef TALG_REPORT_HPP
#define TALG_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "talg/codes.hpp"
#include "talg/invariants.hpp"
#include "talg/matgroup.hpp"
#include "talg/scheme.hpp"
#include "talg/terwilliger.hpp"

namespace talg {

typedef nlohmann::ordered_json Json;

/** Knobs shared by the report builders. */
struct ReportOptions
{
    /** Molien series truncation length. */
    int terms = 40;
    /** Worker threads (0 = automatic / TERWILLIGER_THREADS). */
    int threads = 0;
    /** Closure depth guard. */
    int maxDepth = 4;
    /** Group enumeration cap. */
    long cap = 100000;
};

/** The full Terwilliger pipeline output for one group. */
struct GroupArtifacts
{
    std::string name;
    Scheme scheme;
    IntersectionTensor p;
    TAlgebra algebra;
    CenterBasis center;
    std::vector<CentralIdempotent> idempotents;
    /** Aligned with idempotents (reports sort ascending). */
    std::vector<long> degrees;
};

/** Runs scheme construction through Wedderburn degrees for a built-in group. */
GroupArtifacts computeGroupArtifacts(const std::string& name,
                                     const ReportOptions& opts = ReportOptions());

/**
 * Order, class count and class sizes; compared against the published
 * table when `name` designates a built-in group (otherwise `name` may be
 * empty and no comparison is made).
 */
Json groupInfoReport(const std::string& name, const MatGroup& group,
                     const ConjugacyClasses& classes);

/**
 * Relation/intersection-number report, including the exact Bose-Mesner
 * verification on all rows and the two dimension bounds.
 */
Json schemeReport(const std::string& name, const Scheme& scheme, const IntersectionTensor& p);

/**
 * The flagship report: {order, classSizes, dimT, dimBoundLower,
 * dimBoundUpper, blockCounts, centerDim, degrees, paperAgrees}, plus the
 * closure history and idempotent coordinates.
 */
Json terwilligerReport(const GroupArtifacts& art);

/**
 * E-polynomials and the generation certificate {group, generatorsDegrees,
 * jacobianNonzero, degreeProduct, molienMatch, paperIdentities} for a
 * built-in group.
 */
Json invariantsReport(const std::string& name, const ReportOptions& opts = ReportOptions());

/** Molien series coefficients and the closed-form product comparison. */
Json molienReport(const std::string& name, const MatGroup& group, int terms, int threads = 0);

/** A single E-polynomial, compared against its published closed form. */
Json epolyReport(const std::string& name, const MatGroup& group, int degree, int threads = 0);

/**
 * Weight enumerator, self-duality, type classification and enumerator
 * invariance for a built-in fixture.
 */
Json codeReport(const std::string& fixture, Duality duality, const ReportOptions& opts = ReportOptions());

/** Default duality used for a fixture ("hexacode" is Hermitian). */
Duality fixtureDuality(const std::string& fixture);

/**
 * The complete verification run: per group, every report above plus the
 * matching code fixture; `groupFilter` empty means all four groups.
 */
Json verifyAllReport(const std::string& groupFilter, const ReportOptions& opts = ReportOptions());

/** Plain-text rendering (dispatches on the report's "command" field). */
std::string renderText(const Json& report);

/**
 * True when every verification leg in the report passed; discrepancy
 * notes against published values do not count as failures.
 */
bool reportClean(const Json& report);

}  // namespace talg

#endif  // TALG_REPORT_HPP
