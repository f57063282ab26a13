#pragma once

// Shared helpers for the unit and acceptance suites. The oracles here are
// deliberately independent of the library's algorithms: the determinant uses
// cofactor expansion, the implicitization cross-check uses a Sylvester
// resultant, and random values come from a fixed-seed engine so failures
// reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "liftvf/matrix.hpp"
#include "liftvf/poly.hpp"

namespace testsupport {

using liftvf::Monomial;
using liftvf::Poly;
using liftvf::PolyMatrix;
using liftvf::Rational;
using liftvf::VarTablePtr;

// Cofactor (Laplace) expansion along the first row.
inline Poly cofactor_determinant(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Poly det = Poly::zero(m.table());
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, m.table());
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jc++) = m.at(i, j);
            }
        }
        const Poly term = m.at(0, c) * cofactor_determinant(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
    return Rational(rand_int(rng, -bound, bound));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int bound = 9) {
    Rational r = random_rational(rng, bound);
    while (r == 0) r = random_rational(rng, bound);
    return r;
}

// Sparse random polynomial: up to max_terms monomials of per-variable degree
// at most max_exp, integer coefficients in -9..9.
inline Poly random_poly(std::mt19937_64& rng, const VarTablePtr& table, int max_terms,
                        int max_exp) {
    Poly p = Poly::zero(table);
    const int terms = rand_int(rng, 0, max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m(table->size(), 0);
        for (std::size_t v = 0; v < table->size(); ++v) m[v] = rand_int(rng, 0, max_exp);
        p += Poly::monomial(table, std::move(m), random_rational(rng));
    }
    return p;
}

// Resultant of two univariate polynomials in the variable `var` (coefficients
// are polynomials in the remaining variables), as the cofactor determinant of
// the Sylvester matrix.
inline Poly sylvester_resultant(const Poly& f, const Poly& g, std::size_t var) {
    const int df = liftvf::degree_in(f, var);
    const int dg = liftvf::degree_in(g, var);
    if (df < 0 || dg < 0) throw std::invalid_argument("resultant of a zero polynomial");
    const int n = df + dg;
    PolyMatrix s(n, n, f.table());
    for (int row = 0; row < dg; ++row)
        for (int i = 0; i <= df; ++i)
            s.at(row, row + i) = liftvf::coeff_of_power(f, var, df - i);
    for (int row = 0; row < df; ++row)
        for (int i = 0; i <= dg; ++i)
            s.at(dg + row, row + i) = liftvf::coeff_of_power(g, var, dg - i);
    return cofactor_determinant(s);
}

}  // namespace testsupport
