#pragma once

#include "apolar/exactlin.hpp"
#include "apolar/multipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace apolar {

// How single-term inputs are evaluated. Auto uses the closed forms available for
// monomials (their catalecticants are monomial matrices); Dense always assembles
// and eliminates the catalecticant matrices.
enum class Route { Auto, Dense };

// dim (A_f)_e for every 0 <= e <= dmax.
struct HilbertTable {
    MultiDegree dmax;
    std::vector<std::pair<MultiDegree, std::uint64_t>> values; // degree_box(dmax) order

    std::uint64_t at(const MultiDegree& e) const;
    std::uint64_t total() const;
    std::uint64_t max() const;
};

struct GeneratorCount {
    MultiDegree degree;
    std::size_t count = 0;

    bool operator==(const GeneratorCount&) const = default;
};

// Minimal generators of the apolar ideal, grouped by multidegree.
struct GeneratorProfile {
    std::vector<GeneratorCount> generators; // ascending multidegree, positive counts only
    MultiDegree delta;                      // componentwise max over generator degrees

    // Generator degrees listed with multiplicity.
    std::vector<MultiDegree> degrees() const;
    std::size_t total() const;
};

// Matrix of D -> D(f) from degree-e operators (columns, monomial_basis(e)) to forms of
// degree d - e (rows, monomial_basis(d - e)). Requires 0 <= e <= d and f nonzero.
ExactMatrix catalecticant_matrix(const MultiPoly& f, const MultiDegree& e);

std::uint64_t catalecticant_rank(const MultiPoly& f, const MultiDegree& e, Route route = Route::Auto);

// Basis (as columns over monomial_basis(e)) of the degree-e part of the apolar ideal.
// Components with some e_i > d_i are the whole space and come back as the identity.
ExactMatrix apolar_component(const MultiPoly& f, const MultiDegree& e);

HilbertTable hilbert_function(const MultiPoly& f, Route route = Route::Auto);

std::uint64_t apolar_algebra_dim(const MultiPoly& f, Route route = Route::Auto);

// Minimal generator counts in every multidegree 0 <= e <= d + (1, ..., 1).
GeneratorProfile minimal_generator_degrees(const MultiPoly& f, Route route = Route::Auto);

// Checks (t^perp)_e == sum_i ((f_i^perp)^ext)_e for t = f_1 ⊗ ... ⊗ f_k by comparing
// dimensions of the two subspaces and of their sum. e ranges over the groups of t and
// may reach d + (1, ..., 1).
bool verify_tensor_apolar(std::span<const MultiPoly> factors, const MultiDegree& e);

// Entry count of the largest catalecticant of a multidegree-d form over `space`
// (saturating). Used for resource budgeting.
std::uint64_t largest_catalecticant_entries(const VarSpace& space, const MultiDegree& d);

} // namespace apolar
