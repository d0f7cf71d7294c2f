#pragma once

#include "apolar/apolarity.hpp"
#include "apolar/multipoly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace apolar {

inline constexpr std::uint64_t kDefaultMatrixBudget = 4'000'000;
inline constexpr unsigned kDefaultRootDigits = 12;

struct AnalysisOptions {
    // Refuse any tensor power whose largest catalecticant has more entries than this.
    std::uint64_t matrix_budget = kDefaultMatrixBudget;
    // Significant digits of reported k-th roots.
    unsigned root_digits = kDefaultRootDigits;
    // analyze() attaches star verdicts for k = 1 .. verdict_powers.
    unsigned verdict_powers = 1;
    Route route = Route::Auto;
};

// What the RS quotient bounds. For one group it is a cactus-rank (hence rank) lower
// bound outright; with several groups it holds only for tensors satisfying the star condition.
enum class RsScope { CactusRankUnconditional, ConditionalOnStar };

const char* to_string(RsScope scope);
RsScope rs_scope_from_string(const std::string& s);

struct RsBound {
    Rational value;          // dim A_f / (delta_1 ... delta_k)
    std::uint64_t ceiling;   // smallest integer >= value
    RsScope scope;
    std::uint64_t dim_algebra;
    MultiDegree delta;
};

RsBound rs_bound(const MultiPoly& f, Route route = Route::Auto);

// max_e rank cat_e(f): a lower bound on border cactus rank, hence on border rank,
// cactus rank and rank.
std::uint64_t flattening_bound(const MultiPoly& f, Route route = Route::Auto);

// Waring rank of x_0^{a_0} ... x_n^{a_n}: prod (a_i + 1) / (min a_i + 1) over the
// nonzero exponents.
std::uint64_t ccg_monomial_rank(std::span<const unsigned> exponents);

// Border-rank upper bound prod (a_i + 1) / (max a_i + 1); also the conjectured value of
// border rank and border cactus rank of the monomial.
std::uint64_t lt_monomial_border_upper(std::span<const unsigned> exponents);

struct PowerTerm {
    unsigned k = 0;
    std::uint64_t bound = 0;  // flattening_bound(f^{⊗k})
    std::string root;         // bound^(1/k), truncated to the requested significant digits

    bool operator==(const PowerTerm&) const = default;
};

struct AsymptoticSequence {
    std::vector<PowerTerm> terms;
    // Largest k-th root over the sequence: a lower bound on the tensor asymptotic rank,
    // hence on border rank and border cactus rank.
    unsigned best_k = 0;
    std::string best_root;
};

AsymptoticSequence asymptotic_sequence(const MultiPoly& f, unsigned max_k, const AnalysisOptions& options = {});

struct StarVerdict {
    unsigned k = 0;
    std::uint64_t target = 0;              // ceil((dim A_f / prod delta_i)^k)
    bool certified_by_flattening = false;  // false means "not certified here", never "fails"
    std::uint64_t flattening_of_power = 0;

    bool operator==(const StarVerdict&) const = default;
};

StarVerdict star_certificate(const MultiPoly& f, unsigned k, const AnalysisOptions& options = {});

// Exact Waring rank of a nonzero binary form, read off the two generators of f^perp.
std::uint64_t sylvester_binary_rank(const MultiPoly& f);

struct InputSummary {
    MultiDegree mdeg;
    std::size_t groups = 0;
    std::size_t terms = 0;

    bool operator==(const InputSummary&) const = default;
};

struct BoundReport {
    InputSummary input;
    std::uint64_t dim_algebra = 0;
    MultiDegree delta;
    Rational rs_value;
    std::uint64_t rs_floor = 0;  // integer lower bound: ceil(rs_value)
    RsScope rs_scope = RsScope::CactusRankUnconditional;
    std::uint64_t flattening = 0;
    // Monomial fields: only for single-term, single-group inputs.
    std::optional<std::uint64_t> ccg_rank;
    std::optional<std::uint64_t> lt_border_upper;
    std::optional<std::uint64_t> conjectured_border;
    // Only for single-group forms in two variables.
    std::optional<std::uint64_t> binary_rank;
    std::vector<StarVerdict> verdicts;

    bool operator==(const BoundReport&) const = default;
};

BoundReport analyze(const MultiPoly& f, const AnalysisOptions& options = {});

// analyze() of x_0^{a_0} ... x_n^{a_n} in one group of n + 1 variables.
BoundReport monomial_report(std::span<const unsigned> exponents, const AnalysisOptions& options = {});

// n^(1/k) truncated to `digits` significant digits, e.g. "1.41421356237" for (2, 2, 12).
// Computed with integer k-th roots, so the printed digits are exact.
std::string kth_root_decimal(const Integer& n, unsigned k, unsigned digits);

} // namespace apolar
