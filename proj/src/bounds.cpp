#include "apolar/bounds.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace apolar {

namespace {

std::uint64_t to_u64(const Integer& n, const char* what) {
    if (sgn(n) < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
        throw ResourceError(std::string(what) + " does not fit in 64 bits");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
}

Integer from_u64(std::uint64_t v) {
    Integer out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

std::uint64_t ceil_of(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return to_u64(c, "rational ceiling");
}

std::vector<unsigned> nonzero_exponents(std::span<const unsigned> exponents, const char* context) {
    std::vector<unsigned> out;
    std::copy_if(exponents.begin(), exponents.end(), std::back_inserter(out), [](unsigned a) { return a > 0; });
    if (out.empty()) throw DomainError(std::string(context) + ": the monomial has degree 0");
    return out;
}

std::uint64_t box_volume(const std::vector<unsigned>& a) {
    Integer out = 1;
    for (unsigned x : a) out *= x + 1;
    return to_u64(out, "monomial box volume");
}

void check_budget(const MultiPoly& f, unsigned k, const AnalysisOptions& options) {
    const std::uint64_t base = largest_catalecticant_entries(f.space(), f.mdeg());
    Integer needed = 1;
    for (unsigned i = 0; i < k; ++i) needed *= from_u64(base);
    if (needed > from_u64(options.matrix_budget)) {
        throw ResourceError("tensor power k=" + std::to_string(k) + " needs a catalecticant with " + needed.get_str() +
                                " entries; matrix budget is " + std::to_string(options.matrix_budget),
                            k);
    }
}

// Univariate polynomials over Q, lowest degree first, no trailing zeros.
using Univariate = std::vector<Rational>;

void trim(Univariate& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b) {
    while (a.size() >= b.size()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Univariate gcd(Univariate a, Univariate b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Univariate r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Univariate derivative(const Univariate& p) {
    Univariate out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
    trim(out);
    return out;
}

// coeffs[i] multiplies u^(n-i) v^i. Squarefree as a binary form: v divides at most once
// and the dehomogenisation at v = 1 has no repeated root.
bool squarefree_binary(const std::vector<Rational>& coeffs) {
    const std::size_t n = coeffs.size() - 1;
    std::size_t v_power = 0;
    while (v_power < coeffs.size() && sgn(coeffs[v_power]) == 0) ++v_power;
    if (v_power > 1) return false;
    Univariate h(n + 1);
    for (std::size_t i = 0; i <= n; ++i) h[n - i] = coeffs[i];
    trim(h);
    return gcd(h, derivative(h)).size() <= 1;
}

} // namespace

const char* to_string(RsScope scope) {
    switch (scope) {
    case RsScope::CactusRankUnconditional: return "CactusRankUnconditional";
    case RsScope::ConditionalOnStar: return "ConditionalOnStar";
    }
    return "?";
}

RsScope rs_scope_from_string(const std::string& s) {
    if (s == "CactusRankUnconditional") return RsScope::CactusRankUnconditional;
    if (s == "ConditionalOnStar") return RsScope::ConditionalOnStar;
    throw StructuralError("unknown rs_scope '" + s + "'");
}

RsBound rs_bound(const MultiPoly& f, Route route) {
    require_nonzero(f, "rs_bound");
    const GeneratorProfile gens = minimal_generator_degrees(f, route);
    Integer denom = 1;
    for (unsigned d : gens.delta.entries) denom *= d;
    RsBound out;
    out.dim_algebra = apolar_algebra_dim(f, route);
    out.value = Rational(from_u64(out.dim_algebra), denom);
    out.value.canonicalize();
    out.ceiling = ceil_of(out.value);
    out.scope = f.space().group_count() == 1 ? RsScope::CactusRankUnconditional : RsScope::ConditionalOnStar;
    out.delta = gens.delta;
    return out;
}

std::uint64_t flattening_bound(const MultiPoly& f, Route route) {
    require_nonzero(f, "flattening_bound");
    return hilbert_function(f, route).max();
}

std::uint64_t ccg_monomial_rank(std::span<const unsigned> exponents) {
    const std::vector<unsigned> a = nonzero_exponents(exponents, "ccg_monomial_rank");
    return box_volume(a) / (*std::min_element(a.begin(), a.end()) + 1);
}

std::uint64_t lt_monomial_border_upper(std::span<const unsigned> exponents) {
    const std::vector<unsigned> a = nonzero_exponents(exponents, "lt_monomial_border_upper");
    return box_volume(a) / (*std::max_element(a.begin(), a.end()) + 1);
}

std::string kth_root_decimal(const Integer& n, unsigned k, unsigned digits) {
    if (sgn(n) <= 0) throw DomainError("kth_root_decimal: n must be positive");
    if (k == 0) throw DomainError("kth_root_decimal: k must be positive");
    if (digits == 0) throw DomainError("kth_root_decimal: need at least one digit");
    Integer whole;
    mpz_root(whole.get_mpz_t(), n.get_mpz_t(), k);
    const std::size_t int_digits = whole.get_str().size();
    const std::size_t frac_digits = digits > int_digits ? digits - int_digits : 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits * k);
    Integer scaled = n * scale;
    Integer root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k);
    std::string s = root.get_str();
    if (frac_digits == 0) return s;
    return s.substr(0, s.size() - frac_digits) + "." + s.substr(s.size() - frac_digits);
}

AsymptoticSequence asymptotic_sequence(const MultiPoly& f, unsigned max_k, const AnalysisOptions& options) {
    require_nonzero(f, "asymptotic_sequence");
    if (max_k == 0) throw DomainError("asymptotic_sequence: K must be at least 1");
    for (unsigned k = 1; k <= max_k; ++k) check_budget(f, k, options);

    AsymptoticSequence out;
    MultiPoly power = f;
    std::uint64_t best_bound = 0;
    for (unsigned k = 1; k <= max_k; ++k) {
        if (k > 1) power = tensor_product(power, f);
        PowerTerm term;
        term.k = k;
        term.bound = flattening_bound(power, options.route);
        term.root = kth_root_decimal(from_u64(term.bound), k, options.root_digits);
        // bound^(1/k) > best^(1/best_k)  <=>  bound^best_k > best^k, exactly.
        bool better = out.best_k == 0;
        if (!better) {
            Integer lhs;
            Integer rhs;
            mpz_pow_ui(lhs.get_mpz_t(), from_u64(term.bound).get_mpz_t(), out.best_k);
            mpz_pow_ui(rhs.get_mpz_t(), from_u64(best_bound).get_mpz_t(), k);
            better = lhs > rhs;
        }
        if (better) {
            best_bound = term.bound;
            out.best_k = k;
            out.best_root = term.root;
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

StarVerdict star_certificate(const MultiPoly& f, unsigned k, const AnalysisOptions& options) {
    require_nonzero(f, "star_certificate");
    if (k == 0) throw DomainError("star_certificate: k must be at least 1");
    check_budget(f, k, options);
    const RsBound rs = rs_bound(f, options.route);
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), rs.value.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), rs.value.get_den_mpz_t(), k);
    Integer target;
    mpz_cdiv_q(target.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    StarVerdict out;
    out.k = k;
    out.target = to_u64(target, "star target");
    out.flattening_of_power = flattening_bound(tensor_power(f, k), options.route);
    out.certified_by_flattening = out.flattening_of_power >= out.target;
    return out;
}

std::uint64_t sylvester_binary_rank(const MultiPoly& f) {
    require_nonzero(f, "sylvester_binary_rank");
    if (f.space().group_count() != 1 || f.space().group(0).dim != 2) {
        throw DomainError("sylvester_binary_rank: input is not a binary form (one group of dimension 2)");
    }
    const std::vector<MultiDegree> degrees = minimal_generator_degrees(f, Route::Dense).degrees();
    const unsigned d = f.mdeg()[0];
    if (degrees.size() != 2 || degrees[0][0] + degrees[1][0] != d + 2) {
        throw DomainError("sylvester_binary_rank: apolar ideal is not a complete intersection of degree d + 2");
    }
    const unsigned low = degrees[0][0];
    const unsigned high = degrees[1][0];
    if (low == high) return low;
    const ExactMatrix g = apolar_component(f, {low});
    return squarefree_binary(g.column(0)) ? low : high;
}

BoundReport analyze(const MultiPoly& f, const AnalysisOptions& options) {
    require_nonzero(f, "analyze");
    check_budget(f, 1, options);
    BoundReport out;
    out.input = {f.mdeg(), f.space().group_count(), f.term_count()};

    const HilbertTable hf = hilbert_function(f, options.route);
    const GeneratorProfile gens = minimal_generator_degrees(f, options.route);
    out.dim_algebra = hf.total();
    out.delta = gens.delta;
    Integer denom = 1;
    for (unsigned d : gens.delta.entries) denom *= d;
    out.rs_value = Rational(from_u64(out.dim_algebra), denom);
    out.rs_value.canonicalize();
    out.rs_floor = ceil_of(out.rs_value);
    out.rs_scope = f.space().group_count() == 1 ? RsScope::CactusRankUnconditional : RsScope::ConditionalOnStar;
    out.flattening = hf.max();

    if (f.space().group_count() == 1 && f.term_count() == 1) {
        const auto& alpha = f.terms().begin()->first.exps;
        if (std::any_of(alpha.begin(), alpha.end(), [](unsigned a) { return a > 0; })) {
            out.ccg_rank = ccg_monomial_rank(alpha);
            out.lt_border_upper = lt_monomial_border_upper(alpha);
            out.conjectured_border = out.lt_border_upper;
        }
    }
    if (f.space().group_count() == 1 && f.space().group(0).dim == 2) out.binary_rank = sylvester_binary_rank(f);

    for (unsigned k = 1; k <= options.verdict_powers; ++k) out.verdicts.push_back(star_certificate(f, k, options));
    return out;
}

BoundReport monomial_report(std::span<const unsigned> exponents, const AnalysisOptions& options) {
    if (exponents.empty()) throw DomainError("monomial_report: no variables");
    const VarSpace space = VarSpace::single("x", static_cast<unsigned>(exponents.size()));
    return analyze(MultiPoly::monomial(space, ExponentVector(std::vector<unsigned>(exponents.begin(), exponents.end()))),
                   options);
}

} // namespace apolar
