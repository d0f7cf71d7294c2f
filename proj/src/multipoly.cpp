#include "apolar/multipoly.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace apolar {

namespace {

bool valid_label(const std::string& label) {
    if (label.empty()) return false;
    return std::all_of(label.begin(), label.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '\'';
    });
}

// alpha! / (alpha - beta)! accumulated over all variables; requires beta <= alpha.
Integer falling_factorial(const ExponentVector& alpha, const ExponentVector& beta) {
    Integer out = 1;
    for (std::size_t v = 0; v < alpha.size(); ++v) {
        for (unsigned t = 0; t < beta[v]; ++t) out *= alpha[v] - t;
    }
    return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// Compositions of `degree` into `parts` nonnegative parts, first part descending.
void compositions(unsigned degree, unsigned parts, std::vector<unsigned>& current,
                  std::vector<std::vector<unsigned>>& out) {
    if (parts == 1) {
        current.push_back(degree);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (unsigned first = degree + 1; first-- > 0;) {
        current.push_back(first);
        compositions(degree - first, parts - 1, current, out);
        current.pop_back();
    }
}

} // namespace

VarSpace::VarSpace(std::vector<VarGroup> groups) : groups_(std::move(groups)) {
    if (groups_.empty()) throw StructuralError("VarSpace needs at least one variable group");
    std::set<std::string> seen;
    for (const auto& g : groups_) {
        if (!valid_label(g.label)) throw StructuralError("invalid group label '" + g.label + "'");
        if (g.dim == 0) throw StructuralError("group '" + g.label + "' has dimension 0");
        if (!seen.insert(g.label).second) throw StructuralError("duplicate group label '" + g.label + "'");
        offsets_.push_back(variable_count_);
        variable_count_ += g.dim;
    }
}

VarSpace VarSpace::single(std::string label, unsigned dim) {
    return VarSpace({VarGroup{std::move(label), dim}});
}

std::string VarSpace::variable_name(std::size_t group, std::size_t index) const {
    return groups_.at(group).label + std::to_string(index);
}

bool VarSpace::same_shape(const VarSpace& other) const {
    return std::equal(groups_.begin(), groups_.end(), other.groups_.begin(), other.groups_.end(),
                      [](const VarGroup& a, const VarGroup& b) { return a.dim == b.dim; });
}

VarSpace concat(const VarSpace& a, const VarSpace& b) {
    std::vector<VarGroup> groups = a.groups();
    std::set<std::string> used;
    for (const auto& g : groups) used.insert(g.label);
    for (auto g : b.groups()) {
        while (used.count(g.label) != 0) g.label += '\'';
        used.insert(g.label);
        groups.push_back(std::move(g));
    }
    return VarSpace(std::move(groups));
}

unsigned MultiDegree::total() const {
    return std::accumulate(entries.begin(), entries.end(), 0U);
}

bool MultiDegree::within(const MultiDegree& bound) const {
    if (bound.size() != size()) throw StructuralError("multidegree length mismatch");
    for (std::size_t i = 0; i < size(); ++i) {
        if (entries[i] > bound.entries[i]) return false;
    }
    return true;
}

MultiDegree difference(const MultiDegree& a, const MultiDegree& b) {
    if (!b.within(a)) throw DomainError("multidegree " + to_string(b) + " exceeds " + to_string(a));
    MultiDegree out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

MultiDegree concat(const MultiDegree& a, const MultiDegree& b) {
    MultiDegree out = a;
    out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
    return out;
}

std::string to_string(const MultiDegree& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
    }
    return out + ")";
}

std::vector<MultiDegree> degree_box(const MultiDegree& bound) {
    std::vector<MultiDegree> out;
    MultiDegree e = MultiDegree::zeros(bound.size());
    while (true) {
        out.push_back(e);
        std::size_t i = bound.size();
        while (i > 0 && e[i - 1] == bound[i - 1]) {
            e[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++e[i - 1];
    }
    return out;
}

MultiDegree multidegree_of(const VarSpace& space, const ExponentVector& alpha) {
    if (alpha.size() != space.variable_count()) throw StructuralError("exponent vector length does not match VarSpace");
    MultiDegree out = MultiDegree::zeros(space.group_count());
    for (std::size_t g = 0; g < space.group_count(); ++g) {
        const std::size_t off = space.offset(g);
        for (std::size_t j = 0; j < space.group(g).dim; ++j) out[g] += alpha[off + j];
    }
    return out;
}

MultiPoly::MultiPoly(VarSpace space, MultiDegree mdeg) : space_(std::move(space)), mdeg_(std::move(mdeg)) {
    if (mdeg_.size() != space_.group_count()) throw StructuralError("multidegree length does not match VarSpace");
}

MultiPoly MultiPoly::monomial(VarSpace space, ExponentVector alpha, const Rational& coeff) {
    MultiDegree d = multidegree_of(space, alpha);
    MultiPoly out(std::move(space), std::move(d));
    out.add_term(alpha, coeff);
    return out;
}

Rational MultiPoly::coefficient(const ExponentVector& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const ExponentVector& alpha, const Rational& c) {
    if (multidegree_of(space_, alpha) != mdeg_) {
        throw StructuralError("term multidegree differs from polynomial multidegree " + to_string(mdeg_));
    }
    if (sgn(c) == 0) return;
    // Two-argument mpq construction does not reduce; stored coefficients must be canonical.
    Rational v = c;
    v.canonicalize();
    auto [it, inserted] = terms_.try_emplace(alpha, v);
    if (!inserted) {
        it->second += v;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& other, const char* op) const {
    if (!(space_ == other.space_)) throw StructuralError(std::string(op) + ": polynomials live over different VarSpaces");
    if (mdeg_ != other.mdeg_ && !is_zero() && !other.is_zero()) {
        throw StructuralError(std::string(op) + ": multidegrees " + to_string(mdeg_) + " and " +
                              to_string(other.mdeg_) + " differ");
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_compatible(other, "sum");
    if (is_zero()) mdeg_ = other.mdeg_;
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_compatible(other, "difference");
    if (is_zero()) mdeg_ = other.mdeg_;
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    Rational v = c;
    v.canonicalize();
    for (auto& [alpha, coeff] : terms_) coeff *= v;
    return *this;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    if (!(space_ == other.space_)) return false;
    if (is_zero() && other.is_zero()) return true;
    return mdeg_ == other.mdeg_ && terms_ == other.terms_;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(const Rational& c, MultiPoly f) { return f *= c; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.space() == b.space())) throw StructuralError("product: polynomials live over different VarSpaces");
    MultiDegree d = a.mdeg();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += b.mdeg()[i];
    MultiPoly out(a.space(), d);
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            ExponentVector gamma = alpha;
            for (std::size_t v = 0; v < gamma.size(); ++v) gamma.exps[v] += beta[v];
            out.add_term(gamma, ca * cb);
        }
    }
    return out;
}

void require_nonzero(const MultiPoly& f, const char* context) {
    if (f.is_zero()) throw DomainError(std::string(context) + ": the zero polynomial has no apolar structure");
}

std::vector<ExponentVector> monomial_basis(const VarSpace& space, const MultiDegree& mdeg) {
    if (mdeg.size() != space.group_count()) throw StructuralError("multidegree length does not match VarSpace");
    std::vector<std::vector<std::vector<unsigned>>> per_group(space.group_count());
    for (std::size_t g = 0; g < space.group_count(); ++g) {
        std::vector<unsigned> scratch;
        compositions(mdeg[g], space.group(g).dim, scratch, per_group[g]);
    }
    std::vector<ExponentVector> out{ExponentVector{}};
    for (const auto& choices : per_group) {
        std::vector<ExponentVector> next;
        next.reserve(out.size() * choices.size());
        for (const auto& prefix : out) {
            for (const auto& c : choices) {
                ExponentVector v = prefix;
                v.exps.insert(v.exps.end(), c.begin(), c.end());
                next.push_back(std::move(v));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::uint64_t basis_size(const VarSpace& space, const MultiDegree& mdeg) {
    if (mdeg.size() != space.group_count()) throw StructuralError("multidegree length does not match VarSpace");
    std::uint64_t total = 1;
    for (std::size_t g = 0; g < space.group_count(); ++g) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), space.group(g).dim - 1 + mdeg[g], mdeg[g]);
        if (!c.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
        total = saturating_mul(total, c.get_ui());
    }
    return total;
}

BasisIndex::BasisIndex(const VarSpace& space, const MultiDegree& mdeg) : basis_(monomial_basis(space, mdeg)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) position_.emplace(basis_[i], i);
}

std::size_t BasisIndex::find(const ExponentVector& alpha) const {
    auto it = position_.find(alpha);
    return it == position_.end() ? basis_.size() : it->second;
}

MultiPoly apply_operator(const MultiPoly& op, const MultiPoly& f) {
    if (!op.space().same_shape(f.space())) throw StructuralError("apply_operator: operator and polynomial spaces differ");
    MultiDegree d = f.mdeg();
    bool in_range = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (op.mdeg()[i] > d[i]) {
            in_range = false;
            d[i] = 0;
        } else {
            d[i] -= op.mdeg()[i];
        }
    }
    MultiPoly out(f.space(), d);
    if (!in_range) return out;
    for (const auto& [beta, c] : op.terms()) {
        for (const auto& [alpha, a] : f.terms()) {
            bool divides = true;
            for (std::size_t v = 0; v < alpha.size() && divides; ++v) divides = beta[v] <= alpha[v];
            if (!divides) continue;
            ExponentVector rest = alpha;
            for (std::size_t v = 0; v < alpha.size(); ++v) rest.exps[v] -= beta[v];
            out.add_term(rest, c * a * Rational(falling_factorial(alpha, beta)));
        }
    }
    return out;
}

MultiPoly tensor_product(const MultiPoly& f, const MultiPoly& g) {
    MultiPoly out(concat(f.space(), g.space()), concat(f.mdeg(), g.mdeg()));
    for (const auto& [alpha, a] : f.terms()) {
        for (const auto& [beta, b] : g.terms()) {
            ExponentVector joined = alpha;
            joined.exps.insert(joined.exps.end(), beta.exps.begin(), beta.exps.end());
            out.add_term(joined, a * b);
        }
    }
    return out;
}

MultiPoly tensor_power(const MultiPoly& f, unsigned k) {
    if (k == 0) throw DomainError("tensor_power: k must be at least 1");
    MultiPoly out = f;
    for (unsigned i = 1; i < k; ++i) out = tensor_product(out, f);
    return out;
}

bool equal_up_to_relabel(const MultiPoly& f, const MultiPoly& g) {
    if (!f.space().same_shape(g.space())) return false;
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return f.mdeg() == g.mdeg() && f.terms() == g.terms();
}

std::string to_string(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [alpha, c] : f.terms()) {
        Rational mag = abs(c);
        if (sgn(c) < 0) {
            out << (first ? "-" : " - ");
        } else if (!first) {
            out << " + ";
        }
        first = false;
        bool constant = std::all_of(alpha.exps.begin(), alpha.exps.end(), [](unsigned e) { return e == 0; });
        bool wrote = false;
        if (mag != 1 || constant) {
            out << mag.get_str();
            wrote = true;
        }
        for (std::size_t g = 0; g < f.space().group_count(); ++g) {
            for (std::size_t j = 0; j < f.space().group(g).dim; ++j) {
                unsigned e = alpha[f.space().offset(g) + j];
                if (e == 0) continue;
                if (wrote) out << '*';
                out << f.space().variable_name(g, j);
                if (e > 1) out << '^' << e;
                wrote = true;
            }
        }
    }
    return out.str();
}

} // namespace apolar
