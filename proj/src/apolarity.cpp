#include "apolar/apolarity.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace apolar {

namespace {

bool single_term(const MultiPoly& f, Route route) { return route == Route::Auto && f.term_count() == 1; }

void check_degree(const MultiPoly& f, const MultiDegree& e, const char* context) {
    if (e.size() != f.space().group_count()) throw StructuralError(std::string(context) + ": multidegree length mismatch");
}

bool exceeds(const MultiDegree& e, const MultiDegree& d) {
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > d[i]) return true;
    }
    return false;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// #{beta : |beta| = e, beta <= bound componentwise}.
std::uint64_t bounded_compositions(std::span<const unsigned> bound, unsigned e) {
    std::vector<std::uint64_t> ways(e + 1, 0);
    ways[0] = 1;
    for (unsigned b : bound) {
        std::vector<std::uint64_t> next(e + 1, 0);
        for (unsigned s = 0; s <= e; ++s) {
            if (ways[s] == 0) continue;
            for (unsigned t = 0; t <= b && s + t <= e; ++t) next[s + t] += ways[s];
        }
        ways = std::move(next);
    }
    return ways[e];
}

// Rank of cat_e(x^alpha): the number of degree-e monomials dividing x^alpha.
std::uint64_t monomial_catalecticant_rank(const MultiPoly& f, const MultiDegree& e) {
    const ExponentVector& alpha = f.terms().begin()->first;
    std::uint64_t out = 1;
    for (std::size_t g = 0; g < f.space().group_count(); ++g) {
        std::span<const unsigned> part(alpha.exps.data() + f.space().offset(g), f.space().group(g).dim);
        out = sat_mul(out, bounded_compositions(part, e[g]));
    }
    return out;
}

GeneratorProfile profile_from_counts(const std::map<MultiDegree, std::size_t>& counts, std::size_t groups) {
    GeneratorProfile out;
    out.delta = MultiDegree::zeros(groups);
    for (const auto& [deg, n] : counts) {
        if (n == 0) continue;
        out.generators.push_back({deg, n});
        for (std::size_t i = 0; i < groups; ++i) out.delta[i] = std::max(out.delta[i], deg[i]);
    }
    return out;
}

// x^alpha has apolar ideal generated by d_{i,j}^{alpha_{i,j} + 1}.
GeneratorProfile monomial_generators(const MultiPoly& f) {
    const ExponentVector& alpha = f.terms().begin()->first;
    std::map<MultiDegree, std::size_t> counts;
    for (std::size_t g = 0; g < f.space().group_count(); ++g) {
        for (std::size_t j = 0; j < f.space().group(g).dim; ++j) {
            MultiDegree deg = MultiDegree::zeros(f.space().group_count());
            deg[g] = alpha[f.space().offset(g) + j] + 1;
            ++counts[deg];
        }
    }
    return profile_from_counts(counts, f.space().group_count());
}

class ComponentCache {
public:
    explicit ComponentCache(const MultiPoly& f) : f_(f) {}

    const ExactMatrix& get(const MultiDegree& e) {
        auto it = cache_.find(e);
        if (it == cache_.end()) it = cache_.emplace(e, apolar_component(f_, e)).first;
        return it->second;
    }

private:
    const MultiPoly& f_;
    std::map<MultiDegree, ExactMatrix> cache_;
};

GeneratorProfile dense_generators(const MultiPoly& f) {
    const VarSpace& space = f.space();
    const std::size_t groups = space.group_count();
    MultiDegree top = f.mdeg();
    for (auto& x : top.entries) ++x;

    ComponentCache components(f);
    std::map<MultiDegree, std::size_t> counts;
    for (const MultiDegree& e : degree_box(top)) {
        const std::size_t dim = components.get(e).cols();
        if (dim == 0) continue;
        if (e.total() == 0) {
            counts[e] = dim;
            continue;
        }
        // A full component one step below already generates everything in degree e.
        bool full_below = false;
        for (std::size_t i = 0; i < groups && !full_below; ++i) {
            if (e[i] == 0) continue;
            MultiDegree prev = e;
            --prev[i];
            full_below = exceeds(prev, f.mdeg());
        }
        if (full_below) continue;

        const BasisIndex target(space, e);
        std::vector<std::vector<Rational>> columns;
        for (std::size_t i = 0; i < groups; ++i) {
            if (e[i] == 0) continue;
            MultiDegree prev = e;
            --prev[i];
            const ExactMatrix& lower = components.get(prev);
            const std::vector<ExponentVector> lower_basis = monomial_basis(space, prev);
            for (std::size_t j = 0; j < space.group(i).dim; ++j) {
                const std::size_t var = space.offset(i) + j;
                for (std::size_t c = 0; c < lower.cols(); ++c) {
                    std::vector<Rational> col(target.size());
                    for (std::size_t r = 0; r < lower.rows(); ++r) {
                        if (sgn(lower(r, c)) == 0) continue;
                        ExponentVector shifted = lower_basis[r];
                        ++shifted.exps[var];
                        col[target.find(shifted)] = lower(r, c);
                    }
                    columns.push_back(std::move(col));
                }
            }
        }
        ExactMatrix products(target.size(), columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            for (std::size_t r = 0; r < target.size(); ++r) products(r, c) = columns[c][r];
        }
        const std::size_t generated = rank(products);
        if (dim > generated) counts[e] = dim - generated;
    }
    return profile_from_counts(counts, groups);
}

} // namespace

std::uint64_t HilbertTable::at(const MultiDegree& e) const {
    for (const auto& [deg, v] : values) {
        if (deg == e) return v;
    }
    throw DomainError("HilbertTable: multidegree " + to_string(e) + " out of range");
}

std::uint64_t HilbertTable::total() const {
    std::uint64_t out = 0;
    for (const auto& entry : values) out += entry.second;
    return out;
}

std::uint64_t HilbertTable::max() const {
    std::uint64_t out = 0;
    for (const auto& entry : values) out = std::max(out, entry.second);
    return out;
}

std::vector<MultiDegree> GeneratorProfile::degrees() const {
    std::vector<MultiDegree> out;
    for (const auto& g : generators) out.insert(out.end(), g.count, g.degree);
    return out;
}

std::size_t GeneratorProfile::total() const {
    std::size_t out = 0;
    for (const auto& g : generators) out += g.count;
    return out;
}

ExactMatrix catalecticant_matrix(const MultiPoly& f, const MultiDegree& e) {
    require_nonzero(f, "catalecticant_matrix");
    check_degree(f, e, "catalecticant_matrix");
    if (!e.within(f.mdeg())) {
        throw DomainError("catalecticant_matrix: degree " + to_string(e) + " exceeds " + to_string(f.mdeg()));
    }
    const BasisIndex rows(f.space(), difference(f.mdeg(), e));
    const std::vector<ExponentVector> cols = monomial_basis(f.space(), e);
    ExactMatrix out(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const ExponentVector& beta = cols[j];
        for (const auto& [gamma, c] : f.terms()) {
            ExponentVector alpha = gamma;
            Integer scale = 1;
            bool divides = true;
            for (std::size_t v = 0; v < gamma.size() && divides; ++v) {
                if (beta[v] > gamma[v]) {
                    divides = false;
                    break;
                }
                for (unsigned t = 0; t < beta[v]; ++t) scale *= gamma[v] - t;
                alpha.exps[v] -= beta[v];
            }
            if (!divides) continue;
            out(rows.find(alpha), j) += c * Rational(scale);
        }
    }
    return out;
}

std::uint64_t catalecticant_rank(const MultiPoly& f, const MultiDegree& e, Route route) {
    require_nonzero(f, "catalecticant_rank");
    check_degree(f, e, "catalecticant_rank");
    if (!e.within(f.mdeg())) {
        throw DomainError("catalecticant_rank: degree " + to_string(e) + " exceeds " + to_string(f.mdeg()));
    }
    if (single_term(f, route)) return monomial_catalecticant_rank(f, e);
    return rank(catalecticant_matrix(f, e));
}

ExactMatrix apolar_component(const MultiPoly& f, const MultiDegree& e) {
    require_nonzero(f, "apolar_component");
    check_degree(f, e, "apolar_component");
    if (exceeds(e, f.mdeg())) return ExactMatrix::identity(monomial_basis(f.space(), e).size());
    return kernel_basis(catalecticant_matrix(f, e));
}

HilbertTable hilbert_function(const MultiPoly& f, Route route) {
    require_nonzero(f, "hilbert_function");
    HilbertTable out;
    out.dmax = f.mdeg();
    for (const MultiDegree& e : degree_box(f.mdeg())) out.values.emplace_back(e, catalecticant_rank(f, e, route));
    return out;
}

std::uint64_t apolar_algebra_dim(const MultiPoly& f, Route route) {
    return hilbert_function(f, route).total();
}

GeneratorProfile minimal_generator_degrees(const MultiPoly& f, Route route) {
    require_nonzero(f, "minimal_generator_degrees");
    if (single_term(f, route)) return monomial_generators(f);
    return dense_generators(f);
}

bool verify_tensor_apolar(std::span<const MultiPoly> factors, const MultiDegree& e) {
    if (factors.size() < 2) throw StructuralError("verify_tensor_apolar: needs at least two factors");
    for (const auto& f : factors) require_nonzero(f, "verify_tensor_apolar");

    MultiPoly t = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) t = tensor_product(t, factors[i]);
    check_degree(t, e, "verify_tensor_apolar");
    MultiDegree top = t.mdeg();
    for (auto& x : top.entries) ++x;
    if (!e.within(top)) throw DomainError("verify_tensor_apolar: degree " + to_string(e) + " out of range");

    // Split e into the blocks belonging to each factor.
    std::vector<MultiDegree> blocks;
    std::vector<std::uint64_t> block_sizes;
    std::size_t pos = 0;
    for (const auto& f : factors) {
        const std::size_t n = f.space().group_count();
        MultiDegree block(std::vector<unsigned>(e.entries.begin() + pos, e.entries.begin() + pos + n));
        block_sizes.push_back(basis_size(f.space(), block));
        blocks.push_back(std::move(block));
        pos += n;
    }

    const ExactMatrix lhs = apolar_component(t, e);

    ExactMatrix rhs(lhs.rows(), 0);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::uint64_t before = 1;
        std::uint64_t after = 1;
        for (std::size_t j = 0; j < i; ++j) before *= block_sizes[j];
        for (std::size_t j = i + 1; j < factors.size(); ++j) after *= block_sizes[j];
        const ExactMatrix ext = kronecker(kronecker(ExactMatrix::identity(before), apolar_component(factors[i], blocks[i])),
                                          ExactMatrix::identity(after));
        rhs = hconcat(rhs, ext);
    }

    const std::size_t dim = lhs.cols();
    return rank(rhs) == dim && span_union_rank(lhs, rhs) == dim;
}

std::uint64_t largest_catalecticant_entries(const VarSpace& space, const MultiDegree& d) {
    if (d.size() != space.group_count()) throw StructuralError("largest_catalecticant_entries: multidegree length mismatch");
    std::uint64_t out = 1;
    for (std::size_t g = 0; g < space.group_count(); ++g) {
        const VarSpace one = VarSpace::single("x", space.group(g).dim);
        std::uint64_t best = 0;
        for (unsigned e = 0; e <= d[g]; ++e) {
            best = std::max(best, sat_mul(basis_size(one, {d[g] - e}), basis_size(one, {e})));
        }
        out = sat_mul(out, best);
    }
    return out;
}

} // namespace apolar
