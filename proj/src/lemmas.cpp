#include "apolar/lemmas.hpp"

#include "apolar/apolarity.hpp"
#include "apolar/exactlin.hpp"
#include "apolar/text.hpp"

#include <random>

namespace apolar {

namespace {

ExactMatrix random_small_matrix(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> mode(0, 3);
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        // Repeat, negate or zero earlier rows now and then so that kernels are not always trivial.
        const int how = i == 0 ? 0 : mode(rng);
        std::uniform_int_distribution<std::size_t> earlier(0, i == 0 ? 0 : i - 1);
        const std::size_t src = earlier(rng);
        for (std::size_t j = 0; j < cols; ++j) {
            switch (how) {
            case 1: m(i, j) = m(src, j); break;
            case 2: m(i, j) = -m(src, j); break;
            case 3: m(i, j) = 0; break;
            default: m(i, j) = entry(rng); break;
            }
        }
    }
    return m;
}

} // namespace

std::vector<std::pair<MultiPoly, MultiPoly>> builtin_pairs() {
    const VarSpace x2 = parse_groups("x:2");
    const VarSpace x3 = parse_groups("x:3");
    const VarSpace y2 = parse_groups("y:2");
    const VarSpace y3 = parse_groups("y:3");
    auto px2 = [&](const char* s) { return parse_polynomial(s, x2); };
    auto px3 = [&](const char* s) { return parse_polynomial(s, x3); };
    auto py2 = [&](const char* s) { return parse_polynomial(s, y2); };
    auto py3 = [&](const char* s) { return parse_polynomial(s, y3); };
    return {
        {px2("x0*x1^2"), py2("y0*y1^2")},
        {px2("x0^3"), py2("y0^3")},
        {px2("x0^3 + x1^3"), py2("y0*y1")},
        {px3("x0*x1*x2"), py2("y0^2")},
        {px2("x0^2*x1^2"), py2("y0*y1^3")},
        {px2("x0^3 + 3 x0^2 x1 + 3 x0 x1^2 + x1^3"), py2("y0*y1")},
        {px2("x0^3 + x1^3"), py2("y0^3 + y1^3")},
        {px2("x0^2"), py3("y0*y1*y2")},
        {px2("x0*x1"), py2("y0^2 + 4 y0 y1 + 4 y1^2")},
        {px3("x0^2*x1*x2"), py2("y0 + y1")},
    };
}

LemmaCheck check_kronecker_lemma(std::uint32_t seed, std::size_t trials) {
    LemmaCheck out{"kronecker rank and kernel", true, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const ExactMatrix a = random_small_matrix(rng);
        const ExactMatrix b = random_small_matrix(rng);
        const ExactMatrix ab = kronecker(a, b);
        const std::size_t ra = rank(a);
        const std::size_t rb = rank(b);
        const std::size_t rab = rank(ab);
        const std::size_t expected_kernel = a.cols() * b.cols() - ra * rb;

        const ExactMatrix left = kronecker(kernel_basis(a), ExactMatrix::identity(b.cols()));
        const ExactMatrix right = kronecker(ExactMatrix::identity(a.cols()), kernel_basis(b));
        const ExactMatrix kab = kernel_basis(ab);
        const bool inside = (ab * hconcat(left, right)).is_zero();
        const bool spans = span_union_rank(left, right) == expected_kernel;

        ++out.cases;
        if (rab != ra * rb || kab.cols() != expected_kernel || !inside || !spans) {
            out.passed = false;
            out.detail = "trial " + std::to_string(t) + ": rank " + std::to_string(rab) + " vs " +
                         std::to_string(ra) + "*" + std::to_string(rb);
            return out;
        }
    }
    return out;
}

LemmaCheck check_tensor_apolar_lemma(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs) {
    LemmaCheck out{"tensor apolar ideal", true, 0, {}};
    for (const auto& [f, g] : pairs) {
        const std::vector<MultiPoly> factors{f, g};
        MultiDegree top = concat(f.mdeg(), g.mdeg());
        for (auto& x : top.entries) ++x;
        for (const MultiDegree& e : degree_box(top)) {
            ++out.cases;
            if (!verify_tensor_apolar(factors, e)) {
                out.passed = false;
                out.detail = to_string(f) + " (x) " + to_string(g) + " at " + to_string(e);
                return out;
            }
        }
    }
    return out;
}

LemmaCheck check_hilbert_multiplicativity(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs) {
    LemmaCheck out{"hilbert multiplicativity", true, 0, {}};
    for (const auto& [f, g] : pairs) {
        const HilbertTable hf = hilbert_function(f, Route::Dense);
        const HilbertTable hg = hilbert_function(g, Route::Dense);
        const HilbertTable ht = hilbert_function(tensor_product(f, g), Route::Dense);
        ++out.cases;
        bool ok = ht.total() == hf.total() * hg.total();
        for (const auto& [e, v] : ht.values) {
            const std::size_t nf = f.space().group_count();
            MultiDegree ef(std::vector<unsigned>(e.entries.begin(), e.entries.begin() + nf));
            MultiDegree eg(std::vector<unsigned>(e.entries.begin() + nf, e.entries.end()));
            ok = ok && v == hf.at(ef) * hg.at(eg);
        }
        if (!ok) {
            out.passed = false;
            out.detail = to_string(f) + " (x) " + to_string(g);
            return out;
        }
    }
    return out;
}

std::vector<LemmaCheck> run_lemma_suite() {
    const auto pairs = builtin_pairs();
    return {check_kronecker_lemma(20240521U, 200), check_tensor_apolar_lemma(pairs),
            check_hilbert_multiplicativity(pairs)};
}

} // namespace apolar
