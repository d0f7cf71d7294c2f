#include "apolar/errors.hpp"
#include "apolar/multipoly.hpp"
#include "apolar/text.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace apolar;

namespace {

MultiPoly poly(const char* groups, const char* text) { return parse_polynomial(text, parse_groups(groups)); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("var space validation") {
    CHECK_THROWS_AS(VarSpace({}), StructuralError);
    CHECK_THROWS_AS(VarSpace({{"x", 0}}), StructuralError);
    CHECK_THROWS_AS(VarSpace({{"x", 2}, {"x", 1}}), StructuralError);
    const VarSpace s({{"x", 2}, {"y", 3}});
    CHECK(s.variable_count() == 5);
    CHECK(s.offset(1) == 2);
    CHECK(s.variable_name(1, 2) == "y2");
}

TEST_CASE("monomial basis examples") {
    const auto binary = monomial_basis(VarSpace::single("x", 2), {2});
    REQUIRE(binary.size() == 3);
    CHECK(binary[0] == ExponentVector{2, 0});
    CHECK(binary[1] == ExponentVector{1, 1});
    CHECK(binary[2] == ExponentVector{0, 2});

    CHECK(monomial_basis(VarSpace::single("x", 3), {3}).size() == 10);

    const auto mixed = monomial_basis(VarSpace({{"x", 2}, {"y", 2}}), {1, 1});
    REQUIRE(mixed.size() == 4);
    CHECK(mixed[0] == ExponentVector{1, 0, 1, 0});
    CHECK(mixed[1] == ExponentVector{1, 0, 0, 1});
    CHECK(mixed[2] == ExponentVector{0, 1, 1, 0});
    CHECK(mixed[3] == ExponentVector{0, 1, 0, 1});

    CHECK_THROWS_AS(monomial_basis(VarSpace::single("x", 2), {1, 1}), StructuralError);
}

TEST_CASE("monomial basis sizes match the binomial count") {
    for (unsigned n1 = 1; n1 <= 4; ++n1)
        for (unsigned n2 = 1; n2 <= 3; ++n2)
            for (unsigned d1 = 0; d1 <= 4; ++d1)
                for (unsigned d2 = 0; d2 <= 3; ++d2) {
                    const VarSpace s({{"x", n1}, {"y", n2}});
                    const MultiDegree d{d1, d2};
                    const auto basis = monomial_basis(s, d);
                    const std::uint64_t expected = binomial(n1 - 1 + d1, d1) * binomial(n2 - 1 + d2, d2);
                    CHECK(basis.size() == expected);
                    CHECK(basis_size(s, d) == expected);
                    for (std::size_t i = 1; i < basis.size(); ++i) CHECK(CanonicalOrder{}(basis[i - 1], basis[i]));
                    for (const auto& a : basis) CHECK(multidegree_of(s, a) == d);
                }
}

TEST_CASE("apply operator examples") {
    const MultiPoly f = poly("x:2", "x0*x1^2");
    const VarSpace& s = f.space();
    CHECK(apply_operator(MultiPoly::monomial(s, {1, 0}), f) == poly("x:2", "x1^2"));
    CHECK(apply_operator(MultiPoly::monomial(s, {0, 2}), f) == poly("x:2", "2*x0"));
    const MultiPoly killed = apply_operator(MultiPoly::monomial(s, {2, 0}), f);
    CHECK(killed.is_zero());
    CHECK(killed.mdeg() == MultiDegree{1});

    const MultiPoly too_big = apply_operator(MultiPoly::monomial(s, {4, 0}), f);
    CHECK(too_big.is_zero());

    CHECK_THROWS_AS(apply_operator(MultiPoly::monomial(VarSpace::single("x", 3), {1, 0, 0}), f), StructuralError);
}

TEST_CASE("tensor product examples") {
    const MultiPoly f = poly("x:2", "x0*x1^2");
    const MultiPoly g = poly("y:2", "y0*y1^2");
    const MultiPoly t = tensor_product(f, g);
    CHECK(t.mdeg() == MultiDegree{3, 3});
    CHECK(t.term_count() == 1);
    CHECK(t.space().group_count() == 2);

    const MultiPoly c = tensor_product(poly("x:2", "2*x0^2"), poly("y:2", "3*y0"));
    CHECK(c == poly("x:2,y:2", "6*x0^2*y0"));

    const MultiPoly h = poly("z:3", "z0 - z2");
    const MultiPoly left = tensor_product(tensor_product(f, g), h);
    const MultiPoly right = tensor_product(f, tensor_product(g, h));
    CHECK(left.space().group_count() == 3);
    CHECK(equal_up_to_relabel(left, right));
}

TEST_CASE("relabeling keeps groups distinct") {
    const MultiPoly f = poly("x:2", "x0");
    const MultiPoly t = tensor_power(f, 3);
    CHECK(t.space().group(0).label == "x");
    CHECK(t.space().group(1).label == "x'");
    CHECK(t.space().group(2).label == "x''");
    CHECK(to_string(t) == "x0*x'0*x''0");
}

TEST_CASE("tensor power examples") {
    const MultiPoly f = poly("x:2", "x0*x1^2");
    CHECK(equal_up_to_relabel(tensor_power(f, 1), f));
    const MultiPoly f2 = tensor_power(f, 2);
    CHECK(f2.term_count() == 1);
    CHECK(f2.mdeg() == MultiDegree{3, 3});
    CHECK(tensor_power(poly("x:2", "x0^3 + x1^3"), 2).term_count() == 4);
    CHECK(tensor_power(poly("x:2", "x0^3 + x1^3"), 3).term_count() == 8);
    CHECK_THROWS_AS(tensor_power(f, 0), DomainError);
}

TEST_CASE("arithmetic and formatting") {
    MultiPoly f = poly("x:2,y:2", "-2/5 x0^2 y1 + x1^2 y0");
    CHECK(to_string(f) == "-2/5*x0^2*y1 + x1^2*y0");
    f -= poly("x:2,y:2", "x1^2*y0");
    CHECK(to_string(f) == "-2/5*x0^2*y1");
    f *= Rational(0);
    CHECK(f.is_zero());
    CHECK(to_string(f) == "0");
    CHECK_THROWS_AS(require_nonzero(f, "test"), DomainError);
    CHECK_THROWS_AS(poly("x:2", "x0") + poly("x:2", "x0^2"), StructuralError);
    CHECK(poly("x:2", "x0") * poly("x:2", "x0 + x1") == poly("x:2", "x0^2 + x0*x1"));
}

TEST_CASE("apply operator is bilinear") {
    std::mt19937 rng(11);
    const VarSpace s({{"x", 3}, {"y", 2}});
    for (int trial = 0; trial < 60; ++trial) {
        const MultiDegree d{3, 2};
        const MultiDegree e{1, 1};
        const MultiPoly f = oracle::random_form(s, d, rng);
        const MultiPoly g = oracle::random_form(s, d, rng);
        const MultiPoly D = oracle::random_form(s, e, rng);
        const MultiPoly E = oracle::random_form(s, e, rng);
        CHECK(apply_operator(D, f + g) == apply_operator(D, f) + apply_operator(D, g));
        CHECK(apply_operator(D + E, f) == apply_operator(D, f) + apply_operator(E, f));
        CHECK(apply_operator(Rational(3) * D, f) == Rational(3) * apply_operator(D, f));
    }
}

TEST_CASE("operator products compose") {
    std::mt19937 rng(12);
    const VarSpace s({{"x", 3}, {"y", 2}});
    for (int trial = 0; trial < 60; ++trial) {
        const MultiPoly f = oracle::random_form(s, {3, 3}, rng);
        // Equal variables (same group) and disjoint groups.
        const MultiPoly D = oracle::random_form(s, {1, 0}, rng);
        const MultiPoly E = oracle::random_form(s, {1, 0}, rng);
        const MultiPoly Y = oracle::random_form(s, {0, 2}, rng);
        CHECK(apply_operator(D * E, f) == apply_operator(D, apply_operator(E, f)));
        CHECK(apply_operator(D * Y, f) == apply_operator(D, apply_operator(Y, f)));
        CHECK(apply_operator(Y * D, f) == apply_operator(Y, apply_operator(D, f)));
    }
}

TEST_CASE("product operators act factorwise on tensor products") {
    std::mt19937 rng(13);
    const VarSpace sx = VarSpace::single("x", 2);
    const VarSpace sy = VarSpace::single("y", 3);
    for (int trial = 0; trial < 60; ++trial) {
        const MultiPoly f = oracle::random_form(sx, {3}, rng);
        const MultiPoly g = oracle::random_form(sy, {2}, rng);
        const MultiPoly D1 = oracle::random_form(sx, {trial % 4 == 0 ? 0u : 1u}, rng);
        const MultiPoly D2 = oracle::random_form(sy, {static_cast<unsigned>(trial % 3)}, rng);
        const MultiPoly lhs = apply_operator(tensor_product(D1, D2), tensor_product(f, g));
        const MultiPoly rhs = tensor_product(apply_operator(D1, f), apply_operator(D2, g));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("apply operator matches literal differentiation") {
    std::mt19937 rng(14);
    const VarSpace s = VarSpace::single("x", 3);
    for (int trial = 0; trial < 40; ++trial) {
        const MultiPoly f = oracle::random_form(s, {4}, rng, 5);
        for (const auto& beta : monomial_basis(s, {2})) {
            MultiPoly expected(s, {2});
            for (const auto& [alpha, c] : f.terms()) {
                auto [k, ex] = oracle::differentiate(alpha.exps, beta.exps);
                if (k != 0) expected.add_term(ExponentVector(ex), c * k);
            }
            CHECK(apply_operator(MultiPoly::monomial(s, beta), f) == expected);
        }
    }
}
