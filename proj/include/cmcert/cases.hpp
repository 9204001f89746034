#pragma once

// Named edge-subset cases: which functions are certified on which
// simplices, the curves that show the constants are sharp, and the
// property suites for unit lengthening and squared-length sums.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmcert/anticert.hpp"
#include "cmcert/cayley_menger.hpp"
#include "cmcert/chambers.hpp"
#include "cmcert/dominance.hpp"
#include "cmcert/poly.hpp"
#include "cmcert/random.hpp"

namespace cmcert {

/// a * g + b * f.
struct Combination {
    Integer a;
    Integer b;

    Polynomial polynomial(const EdgeSubset& beta) const { return combination(beta, a, b); }
    /// Endpoint C with 24 g - C f a positive multiple of this; needs a > 0.
    Rational endpoint() const;
    std::string to_string() const;  // "2g-3f", "g", "4g+f"
};

/// t -> sum_k w_k(t) V_k.
struct VertexCurve {
    std::vector<std::pair<LatticePoint, UnivariatePoly>> terms;
    std::array<UnivariatePoly, kEdges> coordinates() const;
};

struct CertTask {
    std::string simplex_name;
    LatticeSimplex6 simplex;
    std::string function_name;
    Combination fn;
    std::optional<std::uint64_t> target;
    /// false for functions recorded for reference but not asserted nonnegative.
    bool claimed = true;
};

/// a(t) g(curve_g(t)) + b(t) f(curve_f(t)); the lowest term is compared.
struct CurveCheck {
    std::string name;
    VertexCurve curve_g;
    VertexCurve curve_f;
    UnivariatePoly a;
    UnivariatePoly b;
    Integer expected_coeff;
    int expected_degree = 0;
    bool asserted = true;
};

struct ValueCheck {
    std::string name;
    LatticePoint point;
    Combination fn;
    Integer expected;
    bool asserted = true;
};

struct IntervalClaim {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool lo_exact = false;
    bool hi_exact = false;
    std::string to_string() const;
};

struct CaseSpec {
    std::string name;
    EdgeSubset beta;
    std::vector<CertTask> tasks;
    std::vector<CurveCheck> curves;
    std::vector<ValueCheck> values;
    IntervalClaim interval;
    std::size_t x_beta_chambers = 0;
    std::vector<std::string> notes;
};

const std::vector<CaseSpec>& case_registry();
/// Throws std::out_of_range for unknown names.
const CaseSpec& case_by_name(const std::string& name);

// --- results -------------------------------------------------------------

enum class Verdict { Gold, Pass, PassWithNote, Refuted, Fail };
std::string to_string(Verdict v);

struct TaskResult {
    CertTask task;
    Certificate cert;
    Verdict verdict = Verdict::Fail;
    std::size_t soundness_samples = 0;
    bool soundness_ok = false;
    /// NegativeWitness only: P(Z(corner)) recomputed from the 6-variable P.
    std::optional<Rational> corner_recheck;
    std::string note;
};

struct CurveResult {
    std::string name;
    UnivariatePoly restriction;
    bool identically_zero = false;
    Integer coeff;
    int degree = -1;
    Integer expected_coeff;
    int expected_degree = 0;
    bool asserted = true;
    bool matches() const { return !identically_zero && coeff == expected_coeff && degree == expected_degree; }
};

struct ValueResult {
    std::string name;
    Integer value;
    Integer expected;
    bool asserted = true;
    bool matches() const { return value == expected; }
};

struct CoverageResult {
    std::size_t x_beta = 0;          // chambers in X_beta
    std::size_t expected = 0;        // stated count
    std::size_t covered = 0;         // X_beta chambers inside an image of a task simplex
    std::size_t stabilizer_order = 0;
    bool ok() const { return x_beta == expected && covered == x_beta; }
};

struct AntiResult {
    std::size_t outside = 0;
    std::vector<Witness> witnesses;
    std::vector<std::string> missing;
    std::uint64_t trials_per_chamber = 0;
    /// When nothing lies outside X_beta: exact trials over all chambers and
    /// how many of them produced f > 0, g < 0.
    std::uint64_t full_search_trials = 0;
    std::size_t full_search_hits = 0;
    bool ok() const { return missing.empty() && witnesses.size() == outside && full_search_hits == 0; }
};

struct IntervalResult {
    std::vector<std::string> lines;
    bool ok = true;
};

struct CaseReport {
    std::string name;
    std::string beta;
    std::vector<TaskResult> tasks;
    std::vector<CurveResult> curves;
    std::vector<ValueResult> values;
    CoverageResult coverage;
    std::optional<AntiResult> anti;
    IntervalResult interval;
    std::vector<std::string> notes;
    bool ok = false;

    std::string text() const;
    nlohmann::ordered_json json() const;
};

struct RunOptions {
    bool parallel = false;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    std::size_t soundness_samples = 200;
    bool anticertify = true;
    /// Total exact trials spread over all chambers when X_beta is everything.
    std::uint64_t full_search_trials = 100'000;
    std::uint64_t budget = 1'000'000;
};

TaskResult run_task(const CertTask& task, const EdgeSubset& beta, const RunOptions& opt);
CurveResult curve_check(const CurveCheck& c, const EdgeSubset& beta);
ValueResult value_check(const ValueCheck& v, const EdgeSubset& beta);
CoverageResult coverage_check(const CaseSpec& spec);
AntiResult anti_certify_case(const EdgeSubset& beta, const RunOptions& opt);
IntervalResult interval_check(const CaseSpec& spec);
CaseReport run_case(const CaseSpec& spec, const RunOptions& opt = {});

// --- property suites -----------------------------------------------------

/// f(D + t) (sum D)^6 >= f(D) (sum D + 6t)^6, exactly. Throws
/// std::invalid_argument for a nontetrahedral D or t < 1.
bool lengthen_check(const EdgeList& d, const Integer& t = 1);
/// Equality in the comparison above.
bool lengthen_equality(const EdgeList& d, const Integer& t = 1);

/// For tetrahedral A, B: fhat(A^2 + B^2) > fhat(A^2) > 0 and every face of
/// A^2 + B^2 satisfies the squared-form triangle condition.
bool appendix_check(const EdgeList& a, const EdgeList& b);
/// For tetrahedral D read as squared lengths: fhat(D) > 0 and the face
/// conditions hold.
bool squared_list_check(const EdgeList& d);

/// Uniform random tetrahedral integer list with entries in [lo, hi], by
/// rejection.
EdgeList random_tetrahedral(Rng& rng, long lo, long hi);

struct SuiteReport {
    std::string name;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t equality_checks = 0;
    std::size_t equality_passed = 0;
    std::vector<std::string> failures;  // first few
    bool ok() const { return passed == trials && equality_passed == equality_checks; }
    std::string text() const;
    nlohmann::ordered_json json() const;
};

SuiteReport lengthen_suite(std::size_t trials, std::uint64_t seed);
SuiteReport appendix_suite(std::size_t trials, std::uint64_t seed);
SuiteReport squared_list_suite(std::size_t trials, std::uint64_t seed);

// --- exploration ---------------------------------------------------------

struct ExploreReport {
    EdgeList point;
    bool pseudo_tetrahedron = false;
    bool tetrahedral = false;
    Integer f;
    Integer g;
    Integer sum;
    std::vector<std::string> chambers;  // D-simplex ids whose chamber holds the point
    std::string text() const;
    nlohmann::ordered_json json() const;
};

ExploreReport explore(const EdgeSubset& beta, const EdgeList& point);

}  // namespace cmcert
