#include "apolar/exactlin.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace apolar {

namespace {

using IntRow = std::vector<Integer>;

// Integer row echelon form. Pivot rows come first, pivot_cols[r] is the pivot column
// of row r, and every pivot row is primitive (content 1, positive pivot).
struct Echelon {
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t cols = 0;

    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

void make_primitive(IntRow& row, std::size_t from) {
    Integer g = 0;
    for (std::size_t j = from; j < row.size(); ++j) {
        if (sgn(row[j]) != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
            if (g == 1) return;
        }
    }
    if (sgn(g) == 0) return;
    for (std::size_t j = from; j < row.size(); ++j) {
        if (sgn(row[j]) != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
    }
}

// target <- (p * target - a * source) / content, where a = target[col], p = source[col].
// Columns before `from` are zero in both rows.
void eliminate(IntRow& target, const IntRow& source, std::size_t col, std::size_t from) {
    Integer p = source[col];
    Integer a = target[col];
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
    mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    const bool unit = p == 1;
    for (std::size_t j = from; j < target.size(); ++j) {
        if (sgn(source[j]) == 0) {
            if (!unit && sgn(target[j]) != 0) target[j] *= p;
            continue;
        }
        if (!unit) target[j] *= p;
        mpz_submul(target[j].get_mpz_t(), a.get_mpz_t(), source[j].get_mpz_t());
    }
    make_primitive(target, from);
}

IntRow cleared_row(std::span<const Rational> row) {
    Integer lcm = 1;
    for (const auto& q : row) {
        if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    IntRow out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (sgn(row[j]) == 0) continue;
        Integer scale;
        mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), row[j].get_den_mpz_t());
        out[j] = row[j].get_num() * scale;
    }
    return out;
}

// Fraction-free forward elimination with first-nonzero pivoting in column order.
// Rows whose entry in the pivot column is already zero are left untouched, so the
// sparse catalecticants of monomial-like inputs eliminate in near-linear time.
Echelon forward_eliminate(const ExactMatrix& m) {
    Echelon e;
    e.cols = m.cols();
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        IntRow r = cleared_row(m.row(i));
        make_primitive(r, 0);
        if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) != 0; })) rows.push_back(std::move(r));
    }
    std::size_t top = 0;
    for (std::size_t c = 0; c < m.cols() && top < rows.size(); ++c) {
        std::size_t pivot = top;
        while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[top], rows[pivot]);
        if (sgn(rows[top][c]) < 0) {
            for (auto& x : rows[top]) x = -x;
        }
        for (std::size_t i = top + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) != 0) eliminate(rows[i], rows[top], c, c);
        }
        e.pivot_cols.push_back(c);
        ++top;
    }
    rows.resize(top);
    e.rows = std::move(rows);
    return e;
}

} // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix out(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw StructuralError("from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
    }
    return out;
}

std::vector<Rational> ExactMatrix::column(std::size_t j) const {
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw StructuralError("matrix product: inner dimensions differ");
    ExactMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) != 0) out(i, j) += x * b(k, j);
            }
        }
    }
    return out;
}

ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) {
        throw StructuralError("hconcat: row counts " + std::to_string(a.rows()) + " and " + std::to_string(b.rows()) +
                              " differ");
    }
    ExactMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

std::size_t rank(const ExactMatrix& m) {
    return forward_eliminate(m).rank();
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
    Echelon e = forward_eliminate(m);
    const std::size_t r = e.rank();
    // Back-substitute to reduced echelon form, still in integers.
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t c = e.pivot_cols[k];
        for (std::size_t i = 0; i < k; ++i) {
            if (sgn(e.rows[i][c]) != 0) eliminate(e.rows[i], e.rows[k], c, e.pivot_cols[i]);
        }
    }
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    ExactMatrix out(m.cols(), m.cols() - r);
    std::size_t out_col = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        out(f, out_col) = 1;
        for (std::size_t k = 0; k < r; ++k) {
            const Integer& entry = e.rows[k][f];
            if (sgn(entry) == 0) continue;
            Rational v(-entry, e.rows[k][e.pivot_cols[k]]);
            v.canonicalize();
            out(e.pivot_cols[k], out_col) = v;
        }
        ++out_col;
    }
    return out;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& x = a(i, j);
            if (sgn(x) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
                }
            }
        }
    }
    return out;
}

std::size_t span_union_rank(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) {
        throw StructuralError("span_union_rank: row counts " + std::to_string(a.rows()) + " and " +
                              std::to_string(b.rows()) + " differ");
    }
    return rank(hconcat(a, b));
}

} // namespace apolar
