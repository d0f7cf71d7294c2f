#pragma once

#include "apolar/multipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace apolar {

// Executable witnesses for the structural facts the bounds rely on.

struct LemmaCheck {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;  // first failing case, empty when passed
};

// Ten small pairs (f, g): monomials, powers of linear forms and x0^3 + x1^3.
std::vector<std::pair<MultiPoly, MultiPoly>> builtin_pairs();

// rank(A ⊠ B) = rank A * rank B and ker(A ⊠ B) = ker A ⊗ V + V ⊗ ker B on random
// integer matrices of size at most 4x4 with entries in [-3, 3].
LemmaCheck check_kronecker_lemma(std::uint32_t seed, std::size_t trials);

// verify_tensor_apolar on every multidegree 0 <= e <= d + 1 of each pair.
LemmaCheck check_tensor_apolar_lemma(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs);

// Hilbert table of f ⊗ g is the outer product of the factor tables, so the apolar
// algebra dimension multiplies.
LemmaCheck check_hilbert_multiplicativity(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs);

std::vector<LemmaCheck> run_lemma_suite();

} // namespace apolar
