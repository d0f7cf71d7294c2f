#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace apolar {

using Rational = mpq_class;
using Integer = mpz_class;

struct VarGroup {
    std::string label;
    unsigned dim = 1;

    bool operator==(const VarGroup&) const = default;
};

// The variable groups V_1, ..., V_k. Group i owns the variables <label>0 .. <label>(dim-1);
// flattened exponent vectors lay the groups out back to back in declaration order.
class VarSpace {
public:
    explicit VarSpace(std::vector<VarGroup> groups);

    static VarSpace single(std::string label, unsigned dim);

    std::size_t group_count() const noexcept { return groups_.size(); }
    const VarGroup& group(std::size_t i) const { return groups_.at(i); }
    const std::vector<VarGroup>& groups() const noexcept { return groups_; }

    std::size_t variable_count() const noexcept { return variable_count_; }
    std::size_t offset(std::size_t group) const { return offsets_.at(group); }
    std::string variable_name(std::size_t group, std::size_t index) const;

    // Equal dimensions group by group; labels ignored.
    bool same_shape(const VarSpace& other) const;

    bool operator==(const VarSpace& other) const { return groups_ == other.groups_; }

private:
    std::vector<VarGroup> groups_;
    std::vector<std::size_t> offsets_;
    std::size_t variable_count_ = 0;
};

// Groups of b follow those of a; clashing labels of b get primes appended (x, x', x'', ...).
VarSpace concat(const VarSpace& a, const VarSpace& b);

struct MultiDegree {
    std::vector<unsigned> entries;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<unsigned> e) : entries(std::move(e)) {}
    MultiDegree(std::initializer_list<unsigned> e) : entries(e) {}

    static MultiDegree zeros(std::size_t n) { return MultiDegree(std::vector<unsigned>(n, 0)); }

    std::size_t size() const noexcept { return entries.size(); }
    unsigned operator[](std::size_t i) const { return entries[i]; }
    unsigned& operator[](std::size_t i) { return entries[i]; }
    unsigned total() const;

    // Componentwise <=.
    bool within(const MultiDegree& bound) const;

    auto operator<=>(const MultiDegree&) const = default;
};

// Componentwise a - b; requires b.within(a).
MultiDegree difference(const MultiDegree& a, const MultiDegree& b);
MultiDegree concat(const MultiDegree& a, const MultiDegree& b);
std::string to_string(const MultiDegree& d);

// All e with 0 <= e <= bound componentwise, lexicographically ascending.
std::vector<MultiDegree> degree_box(const MultiDegree& bound);

struct ExponentVector {
    std::vector<unsigned> exps;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<unsigned> e) : exps(std::move(e)) {}
    ExponentVector(std::initializer_list<unsigned> e) : exps(e) {}

    std::size_t size() const noexcept { return exps.size(); }
    unsigned operator[](std::size_t i) const { return exps[i]; }

    auto operator<=>(const ExponentVector&) const = default;
};

// Canonical monomial order. All monomials compared here share a multidegree, so
// descending lexicographic order on the flattened vector is group-major graded lex.
// Binary quadrics come out as x0^2, x0*x1, x1^2.
struct CanonicalOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const { return b.exps < a.exps; }
};

MultiDegree multidegree_of(const VarSpace& space, const ExponentVector& alpha);

// A multihomogeneous polynomial with exact rational coefficients. Also used for
// constant-coefficient differential operators, reading x_{i,j} as d/dx_{i,j}.
class MultiPoly {
public:
    using TermMap = std::map<ExponentVector, Rational, CanonicalOrder>;

    // The zero polynomial of the given multidegree.
    MultiPoly(VarSpace space, MultiDegree mdeg);

    static MultiPoly monomial(VarSpace space, ExponentVector alpha, const Rational& coeff = 1);

    const VarSpace& space() const noexcept { return space_; }
    const MultiDegree& mdeg() const noexcept { return mdeg_; }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Rational coefficient(const ExponentVector& alpha) const;

    // Adds c * x^alpha, dropping the term if it cancels. alpha must have multidegree mdeg().
    void add_term(const ExponentVector& alpha, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);

    bool operator==(const MultiPoly& other) const;

private:
    void check_compatible(const MultiPoly& other, const char* op) const;

    VarSpace space_;
    MultiDegree mdeg_;
    TermMap terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const Rational& c, MultiPoly f);
// Ordinary polynomial product over the same VarSpace.
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

// Throws DomainError naming `context` when f is zero.
void require_nonzero(const MultiPoly& f, const char* context);

// Every exponent vector of multidegree mdeg, in canonical order.
std::vector<ExponentVector> monomial_basis(const VarSpace& space, const MultiDegree& mdeg);

// prod_i C(n_i + d_i, d_i), saturating at UINT64_MAX.
std::uint64_t basis_size(const VarSpace& space, const MultiDegree& mdeg);

// Position lookup into a monomial basis.
class BasisIndex {
public:
    BasisIndex(const VarSpace& space, const MultiDegree& mdeg);

    std::size_t size() const noexcept { return basis_.size(); }
    const std::vector<ExponentVector>& basis() const noexcept { return basis_; }
    const ExponentVector& at(std::size_t i) const { return basis_.at(i); }
    // Position of alpha, or size() when alpha is not in the basis.
    std::size_t find(const ExponentVector& alpha) const;

private:
    std::vector<ExponentVector> basis_;
    std::map<ExponentVector, std::size_t> position_;
};

// Literal differentiation op(f), no factorial normalisation. Terms of op whose exponent
// exceeds that of f contribute nothing; the result has multidegree d - e (zero if e > d anywhere).
MultiPoly apply_operator(const MultiPoly& op, const MultiPoly& f);

// f ⊗ g over concat(f.space(), g.space()), multidegree d | e.
MultiPoly tensor_product(const MultiPoly& f, const MultiPoly& g);

// f ⊗ ... ⊗ f (k factors). k = 0 is a DomainError.
MultiPoly tensor_power(const MultiPoly& f, unsigned k);

// Same coefficients and multidegree over spaces of the same shape.
bool equal_up_to_relabel(const MultiPoly& f, const MultiPoly& g);

std::string to_string(const MultiPoly& f);

} // namespace apolar
