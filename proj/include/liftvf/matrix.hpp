#pragma once

#include <utility>
#include <vector>

#include "liftvf/poly.hpp"

namespace liftvf {

// Dense matrix of polynomials sharing one variable table, row-major.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, VarTablePtr table);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const VarTablePtr& table() const { return table_; }

    Poly& at(std::size_t r, std::size_t c);
    const Poly& at(std::size_t r, std::size_t c) const;

private:
    std::size_t rows_, cols_;
    VarTablePtr table_;
    std::vector<Poly> entries_;
};

// Exact quotient p/d in the polynomial ring. Throws std::invalid_argument
// when d is zero or does not divide p.
Poly exact_divide(const Poly& p, const Poly& d);

// Exact determinant via fraction-free (Bareiss) elimination over the
// polynomial ring; intermediate divisions are exact so no rational-function
// values ever appear. Throws on a non-square matrix.
Poly determinant(const PolyMatrix& m);

// Division of p by d viewed as univariate polynomials in `var` whose
// coefficients are polynomials in the remaining variables. Requires the
// leading coefficient of d in `var` to be a nonzero rational constant.
// Returns (quotient, remainder) with p = quotient*d + remainder and
// deg_var(remainder) < deg_var(d).
std::pair<Poly, Poly> exact_div_univariate(const Poly& p, const Poly& d, std::size_t var);

// Rank over the rationals by exact Gaussian elimination. Rows may differ in
// length only if empty; missing trailing entries are not allowed.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

// Rank of a matrix whose entries are all degree-0 polynomials. Throws on any
// non-constant entry.
std::size_t rank(const PolyMatrix& m);

}  // namespace liftvf
