#include "apolar/bounds.hpp"
#include "apolar/errors.hpp"
#include "apolar/text.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace apolar;

namespace {

MultiPoly poly(const char* groups, const char* text) { return parse_polynomial(text, parse_groups(groups)); }

MultiPoly monomial(std::vector<unsigned> a) {
    const VarSpace s = VarSpace::single("x", static_cast<unsigned>(a.size()));
    return MultiPoly::monomial(s, ExponentVector(std::move(a)));
}

std::uint64_t brute_flattening(const MultiPoly& f) {
    std::uint64_t best = 0;
    for (const auto& e : degree_box(f.mdeg())) best = std::max<std::uint64_t>(best, oracle::catalecticant_rank(f, e.entries));
    return best;
}

// Closed forms written out independently of the library.
std::uint64_t box(const std::vector<unsigned>& a) {
    std::uint64_t v = 1;
    for (unsigned x : a)
        if (x) v *= x + 1;
    return v;
}

unsigned min_positive(const std::vector<unsigned>& a) {
    unsigned m = ~0U;
    for (unsigned x : a)
        if (x) m = std::min(m, x);
    return m;
}

unsigned max_of(const std::vector<unsigned>& a) { return *std::max_element(a.begin(), a.end()); }

// Exponent vectors with all entries >= 1 in n variables and total degree <= bound.
void monomials_up_to(std::size_t n, unsigned bound, std::vector<std::vector<unsigned>>& out, std::vector<unsigned> cur = {}) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    unsigned used = 0;
    for (unsigned x : cur) used += x;
    const unsigned left = static_cast<unsigned>(n - cur.size());
    for (unsigned a = 1; used + a + (left - 1) <= bound; ++a) {
        cur.push_back(a);
        monomials_up_to(n, bound, out, cur);
        cur.pop_back();
    }
}

} // namespace

TEST_CASE("rs bound examples") {
    const RsBound a = rs_bound(poly("x:2", "x0*x1^2"));
    CHECK(a.value == 2);
    CHECK(a.ceiling == 2);
    CHECK(a.dim_algebra == 6);
    CHECK(a.delta == MultiDegree{3});
    CHECK(a.scope == RsScope::CactusRankUnconditional);

    CHECK(rs_bound(poly("x:3", "x0*x1*x2")).value == 4);
    CHECK(rs_bound(poly("x:2", "x0^3 + 3 x0^2 x1 + 3 x0 x1^2 + x1^3")).value == 1);
    CHECK(rs_bound(poly("x:3", "x0^4")).value == 1);

    const RsBound m = rs_bound(tensor_product(poly("x:2", "x0*x1^2"), poly("y:2", "y0*y1^2")));
    CHECK(m.scope == RsScope::ConditionalOnStar);
    CHECK(m.delta == MultiDegree{3, 3});
    CHECK(m.value == 4);

    CHECK(rs_bound(poly("x:2", "x0^3 + x1^3")).value == 2);
    const RsBound fermat = rs_bound(poly("x:3", "x0^3 + x1^3 + x2^3"));
    CHECK(fermat.value == Rational(8, 3));
    CHECK(fermat.ceiling == 3);

    CHECK_THROWS_AS(rs_bound(MultiPoly(VarSpace::single("x", 2), {2})), DomainError);
}

TEST_CASE("flattening examples") {
    CHECK(flattening_bound(poly("x:2", "x0*x1^2")) == 2);
    CHECK(flattening_bound(poly("x:3", "x0*x1*x2")) == 3);
    const MultiPoly m = poly("x:3", "x0^2*x1^2*x2^2");
    CHECK(flattening_bound(m) == 7);
    CHECK(flattening_bound(m, Route::Dense) == 7);
    CHECK(brute_flattening(m) == 7);
}

TEST_CASE("flattening matches the brute-force oracle") {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 25; ++trial) {
        const MultiPoly f = oracle::random_form(VarSpace::single("x", 3), {static_cast<unsigned>(2 + trial % 3)}, rng, 6);
        CHECK(flattening_bound(f) == brute_flattening(f));
        const MultiPoly g = oracle::random_form(VarSpace({{"x", 2}, {"y", 2}}), {2, 1}, rng, 4);
        CHECK(flattening_bound(g) == brute_flattening(g));
    }
}

TEST_CASE("monomial rank formulas") {
    const std::vector<unsigned> a{1, 2};
    const std::vector<unsigned> b{1, 1, 1};
    const std::vector<unsigned> c{2, 2, 2};
    const std::vector<unsigned> d{1, 5};
    CHECK(ccg_monomial_rank(a) == 3);
    CHECK(ccg_monomial_rank(b) == 4);
    CHECK(ccg_monomial_rank(c) == 9);
    CHECK(lt_monomial_border_upper(a) == 2);
    CHECK(lt_monomial_border_upper(c) == 9);
    CHECK(lt_monomial_border_upper(d) == 2);

    const std::vector<unsigned> padded{0, 1, 0, 2};
    CHECK(ccg_monomial_rank(padded) == 3);
    CHECK(lt_monomial_border_upper(padded) == 2);
    const std::vector<unsigned> zero{0, 0};
    CHECK_THROWS_AS(ccg_monomial_rank(zero), DomainError);
    CHECK_THROWS_AS(lt_monomial_border_upper(zero), DomainError);
}

TEST_CASE("asymptotic sequence examples") {
    const AsymptoticSequence s = asymptotic_sequence(poly("x:2", "x0*x1^2"), 3);
    REQUIRE(s.terms.size() == 3);
    CHECK(s.terms[0].bound == 2);
    CHECK(s.terms[1].bound == 4);
    CHECK(s.terms[2].bound == 8);
    for (const auto& t : s.terms) CHECK(t.root == "2.00000000000");
    CHECK(s.best_root == "2.00000000000");
    CHECK(s.best_k == 1);

    const AsymptoticSequence one = asymptotic_sequence(poly("x:3", "x0^2 x1 + x2^3 - x0 x1 x2"), 1);
    CHECK(one.terms.size() == 1);
    CHECK(one.terms[0].bound == flattening_bound(poly("x:3", "x0^2 x1 + x2^3 - x0 x1 x2")));

    const AsymptoticSequence t = asymptotic_sequence(poly("x:3", "x0*x1*x2"), 2);
    CHECK(t.terms[0].bound == 3);
    CHECK(t.terms[1].bound == 9);
    CHECK(t.terms[0].root == "3.00000000000");
    CHECK(t.terms[1].root == "3.00000000000");

    AnalysisOptions short_roots;
    short_roots.root_digits = 4;
    CHECK(asymptotic_sequence(poly("x:2", "x0^3 + x1^3"), 2, short_roots).terms[0].root == "2.000");
    CHECK_THROWS_AS(asymptotic_sequence(poly("x:2", "x0"), 0), DomainError);
}

TEST_CASE("budget refusals name the power") {
    const MultiPoly m = poly("x:3", "x0^2*x1^2*x2^2");
    CHECK(asymptotic_sequence(m, 3).terms.back().bound == 343);
    try {
        asymptotic_sequence(m, 4);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        REQUIRE(e.power().has_value());
        CHECK(*e.power() == 4);
        CHECK(std::string(e.what()).find("k=4") != std::string::npos);
    }
    AnalysisOptions tiny;
    tiny.matrix_budget = 10;
    CHECK_THROWS_AS(star_certificate(poly("x:2", "x0*x1^2"), 2, tiny), ResourceError);
    CHECK_NOTHROW(star_certificate(poly("x:2", "x0*x1^2"), 1, tiny));
    CHECK_THROWS_AS(analyze(poly("x:3", "x0^2*x1^2*x2^2"), tiny), ResourceError);
}

TEST_CASE("star certificate examples") {
    const StarVerdict a = star_certificate(poly("x:2", "x0*x1^2"), 2);
    CHECK(a == StarVerdict{2, 4, true, 4});
    const StarVerdict b = star_certificate(poly("x:3", "x0*x1*x2"), 1);
    CHECK(b == StarVerdict{1, 4, false, 3});
    for (unsigned k = 1; k <= 3; ++k) {
        const StarVerdict c = star_certificate(poly("x:2", "x0^3 + 3 x0^2 x1 + 3 x0 x1^2 + x1^3"), k);
        CHECK(c.target == 1);
        CHECK(c.certified_by_flattening);
    }
    // target is ceil(rs^k) computed exactly: (8/3)^2 = 64/9 -> 8.
    CHECK(star_certificate(poly("x:3", "x0^3 + x1^3 + x2^3"), 2) == StarVerdict{2, 8, true, 9});
    CHECK_THROWS_AS(star_certificate(poly("x:2", "x0"), 0), DomainError);
}

TEST_CASE("sylvester binary rank examples") {
    CHECK(sylvester_binary_rank(poly("x:2", "x0*x1^2")) == 3);
    for (unsigned d = 1; d <= 6; ++d) CHECK(sylvester_binary_rank(monomial({d, 0})) == 1);
    CHECK(sylvester_binary_rank(poly("x:2", "x0^3 + x1^3")) == 2);
    CHECK(sylvester_binary_rank(poly("x:2", "x0^3 + 3 x0^2 x1 + 3 x0 x1^2 + x1^3")) == 1);
    CHECK(sylvester_binary_rank(poly("x:2", "x0^4 + x1^4")) == 2);
    for (unsigned d = 2; d <= 8; ++d) CHECK(sylvester_binary_rank(monomial({1, d - 1})) == d);
    CHECK_THROWS_AS(sylvester_binary_rank(poly("x:3", "x0*x1*x2")), DomainError);
    CHECK_THROWS_AS(sylvester_binary_rank(poly("x:2,y:2", "x0*y1")), DomainError);
}

TEST_CASE("sylvester rank of sums of powers of distinct linear forms") {
    // (x0 + c x1)^d for r distinct c with r <= (d + 1) / 2 gives rank exactly r.
    const VarSpace s = VarSpace::single("x", 2);
    for (unsigned d = 3; d <= 6; ++d) {
        for (unsigned r = 1; 2 * r <= d + 1; ++r) {
            MultiPoly f(s, {d});
            for (unsigned c = 1; c <= r; ++c) {
                Integer binom = 1;
                Integer power = 1;
                for (unsigned i = 0; i <= d; ++i) {
                    f.add_term({d - i, i}, Rational(binom * power));
                    binom = binom * (d - i) / (i + 1);
                    power *= c;
                }
            }
            CHECK(sylvester_binary_rank(f) == r);
        }
    }
}

TEST_CASE("analyze examples") {
    const BoundReport a = analyze(poly("x:2", "x0*x1^2"));
    CHECK(a.dim_algebra == 6);
    CHECK(a.delta == MultiDegree{3});
    CHECK(a.rs_value == 2);
    CHECK(a.rs_floor == 2);
    CHECK(a.flattening == 2);
    CHECK(a.ccg_rank == 3);
    CHECK(a.lt_border_upper == 2);
    CHECK(a.conjectured_border == 2);
    CHECK(a.binary_rank == 3);
    REQUIRE(a.verdicts.size() == 1);
    CHECK(a.verdicts[0] == StarVerdict{1, 2, true, 2});

    const BoundReport b = analyze(poly("x:3", "x0*x1*x2"));
    CHECK(b.dim_algebra == 8);
    CHECK(b.delta == MultiDegree{2});
    CHECK(b.rs_value == 4);
    CHECK(b.flattening == 3);
    CHECK(b.ccg_rank == 4);
    CHECK(b.lt_border_upper == 4);
    CHECK_FALSE(b.binary_rank.has_value());

    const BoundReport c = analyze(poly("x:3", "x1^5"));
    CHECK(c.rs_floor == 1);
    CHECK(c.flattening == 1);
    CHECK(c.ccg_rank == 1);
    CHECK(c.lt_border_upper == 1);
    CHECK(c.conjectured_border == 1);

    const BoundReport d = analyze(poly("x:2", "x0^3 + 3 x0^2 x1 + 3 x0 x1^2 + x1^3"));
    CHECK(d.rs_value == 1);
    CHECK(d.flattening == 1);
    CHECK(d.binary_rank == 1);
    CHECK_FALSE(d.ccg_rank.has_value());

    const BoundReport e = analyze(tensor_product(poly("x:2", "x0*x1^2"), poly("y:2", "y0*y1^2")));
    CHECK(e.rs_scope == RsScope::ConditionalOnStar);
    CHECK_FALSE(e.ccg_rank.has_value());
    CHECK(e.input == InputSummary{{3, 3}, 2, 1});

    AnalysisOptions three;
    three.verdict_powers = 3;
    CHECK(analyze(poly("x:2", "x0*x1^2"), three).verdicts.size() == 3);

    const std::vector<unsigned> exps{1, 2};
    CHECK(monomial_report(exps) == a);
}

TEST_CASE("monomial invariants over the corpus") {
    std::vector<std::vector<unsigned>> all;
    for (std::size_t n = 1; n <= 3; ++n) monomials_up_to(n, 7, all);
    for (const auto& a : all) {
        const BoundReport r = monomial_report(a);
        REQUIRE(r.ccg_rank.has_value());
        CHECK(*r.ccg_rank == box(a) / (min_positive(a) + 1));
        CHECK(*r.lt_border_upper == box(a) / (max_of(a) + 1));
        // Sandwich and RS against the exact rank.
        CHECK(r.flattening <= *r.lt_border_upper);
        CHECK(*r.lt_border_upper <= *r.ccg_rank);
        CHECK(r.rs_floor <= *r.ccg_rank);
        CHECK(r.rs_value == Rational(box(a)) / (max_of(a) + 1));
        CHECK(r.rs_floor == *r.lt_border_upper);
        CHECK(r.conjectured_border == r.lt_border_upper);
        if (a.size() == 2) CHECK(r.binary_rank == r.ccg_rank);
    }
}

TEST_CASE("flattening power law") {
    const std::vector<MultiPoly> fs{poly("x:2", "x0*x1^2"), poly("x:3", "x0*x1*x2"), poly("x:2", "x0^3 + x1^3"),
                                    poly("x:2", "x0*x1 + x1^2")};
    for (const auto& f : fs) {
        const std::uint64_t base = flattening_bound(f);
        std::uint64_t expected = base;
        for (unsigned k = 1; k <= 3; ++k) {
            CHECK(flattening_bound(tensor_power(f, k)) == expected);
            expected *= base;
        }
    }
}

TEST_CASE("asymptotic roots of monomials are constant and below the border bound") {
    for (const auto& a : std::vector<std::vector<unsigned>>{{1, 2}, {1, 1, 1}, {2, 3}, {1, 1, 2}}) {
        const MultiPoly m = monomial(a);
        const AsymptoticSequence s = asymptotic_sequence(m, 3);
        const std::uint64_t lt = lt_monomial_border_upper(a);
        for (const auto& t : s.terms) {
            CHECK(t.root == s.terms[0].root);
            CHECK(std::stod(t.root) <= static_cast<double>(lt));
        }
    }
}

TEST_CASE("single-group star verdict agrees with the rs/flattening comparison") {
    std::mt19937 rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly f = oracle::random_form(VarSpace::single("x", 2 + trial % 2), {3}, rng, 4);
        const StarVerdict v = star_certificate(f, 1);
        const BoundReport r = analyze(f);
        CHECK(v.target == r.rs_floor);
        CHECK(v.flattening_of_power == r.flattening);
        CHECK(v.certified_by_flattening == (r.flattening >= r.rs_floor));
        CHECK(r.verdicts.front() == v);
    }
}

TEST_CASE("k-th root decimals") {
    CHECK(kth_root_decimal(2, 2, 12) == "1.41421356237");
    CHECK(kth_root_decimal(8, 3, 12) == "2.00000000000");
    CHECK(kth_root_decimal(1000, 3, 12) == "10.0000000000");
    CHECK(kth_root_decimal(7, 1, 12) == "7.00000000000");
    CHECK(kth_root_decimal(3, 2, 1) == "1");
    CHECK(kth_root_decimal(123456, 1, 3) == "123456");
    CHECK_THROWS_AS(kth_root_decimal(0, 2, 12), DomainError);
}

TEST_CASE("rs scope names round-trip") {
    for (const RsScope s : {RsScope::CactusRankUnconditional, RsScope::ConditionalOnStar}) CHECK(rs_scope_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(rs_scope_from_string("maybe"), StructuralError);
}
