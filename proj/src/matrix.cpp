#include "liftvf/matrix.hpp"

#include <stdexcept>

namespace liftvf {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarTablePtr table)
    : rows_(rows), cols_(cols), table_(std::move(table)) {
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("matrix dimensions must be positive");
    entries_.assign(rows_ * cols_, Poly::zero(table_));
}

Poly& PolyMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[r * cols_ + c];
}

const Poly& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[r * cols_ + c];
}

Poly exact_divide(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_divide by zero");
    Poly q = Poly::zero(p.table());
    Poly r = p;
    const auto& [dm, dc] = *d.terms().begin();  // lex-leading term of d
    const std::size_t n = p.table()->size();
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().begin();
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = rm[i] - dm[i];
            if (m[i] < 0) throw std::invalid_argument("exact_divide: not divisible");
        }
        const Poly t = Poly::monomial(p.table(), std::move(m), rc / dc);
        q += t;
        r -= t * d;
    }
    return q;
}

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i].push_back(m.at(i, j));

    bool negate = false;
    Poly prev = Poly::constant(m.table(), Rational(1));
    for (std::size_t t = 0; t + 1 < n; ++t) {
        std::size_t pivot = t;
        while (pivot < n && a[pivot][t].is_zero()) ++pivot;
        if (pivot == n) return Poly::zero(m.table());
        if (pivot != t) {
            std::swap(a[pivot], a[t]);
            negate = !negate;
        }
        for (std::size_t i = t + 1; i < n; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                a[i][j] = exact_divide(a[t][t] * a[i][j] - a[i][t] * a[t][j], prev);
        prev = a[t][t];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

std::pair<Poly, Poly> exact_div_univariate(const Poly& p, const Poly& d, std::size_t var) {
    const int dd = degree_in(d, var);
    if (dd < 0) throw std::invalid_argument("exact_div_univariate: zero divisor");
    const Poly lead = coeff_of_power(d, var, dd);
    if (!lead.is_constant() || lead.is_zero())
        throw std::invalid_argument(
            "exact_div_univariate: leading coefficient in the division variable "
            "is not a nonzero constant");
    const Rational lc = lead.constant_value();

    Poly q = Poly::zero(p.table());
    Poly r = p;
    int dr = degree_in(r, var);
    while (dr >= dd) {
        const Poly a = coeff_of_power(r, var, dr);
        Monomial shift(p.table()->size(), 0);
        shift[var] = dr - dd;
        const Poly t = Poly::monomial(p.table(), std::move(shift), Rational(1) / lc) * a;
        q += t;
        r -= t * d;
        dr = degree_in(r, var);
    }
    return {std::move(q), std::move(r)};
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = 0;
    for (const auto& row : rows) cols = std::max(cols, row.size());
    for (auto& row : rows) row.resize(cols, Rational(0));

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const Rational inv = Rational(1) / rows[rank][c];
        for (std::size_t j = c; j < cols; ++j) rows[rank][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank(const PolyMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Poly& e = m.at(i, j);
            if (!e.is_constant())
                throw std::invalid_argument("rank requires constant matrix entries");
            rows[i].push_back(e.constant_value());
        }
    }
    return rational_rank(std::move(rows));
}

}  // namespace liftvf
