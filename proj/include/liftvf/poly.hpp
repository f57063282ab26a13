#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liftvf/rational.hpp"
#include "liftvf/vartable.hpp"

namespace liftvf {

// Exponent vector, one entry per variable of a VarTable.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
int weighted_degree(const Monomial& m, const VarTable& table);

// Strict descending plain-lex order on exponent vectors. Plain lex is a well
// order on monomials, which exact division by leading terms relies on.
struct MonomialLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed variable table. Canonical form: no stored coefficient is zero, so
// equality of term maps is equality of polynomials. Values are immutable in
// use: every operation returns a new value and instances are safe to share
// between threads.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLexGreater>;

    static Poly zero(VarTablePtr table);
    static Poly constant(VarTablePtr table, Rational c);
    static Poly variable(VarTablePtr table, std::size_t index);
    static Poly monomial(VarTablePtr table, Monomial m, Rational c);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    // Coefficient of an explicit monomial; zero when absent.
    Rational coeff(const Monomial& m) const;
    // Value of a constant polynomial; throws on non-constant input.
    Rational constant_value() const;
    int total_degree() const;  // -1 for the zero polynomial

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);

    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);

private:
    explicit Poly(VarTablePtr table) : table_(std::move(table)) {}

    void add_term(const Monomial& m, const Rational& c);
    static void check_same_table(const Poly& a, const Poly& b);

    VarTablePtr table_;
    TermMap terms_;

    friend class Substitution;
    friend Poly partial_derivative(const Poly&, std::size_t);
};

// Formal partial derivative with respect to variable `var` of p's table.
Poly partial_derivative(const Poly& p, std::size_t var);
Poly partial_derivative(const Poly& p, std::string_view var);

// Degree of p in a single variable (-1 for the zero polynomial).
int degree_in(const Poly& p, std::size_t var);

// Coefficient of var^e as a polynomial over the same table (the var-exponent
// is stripped from each contributing term).
Poly coeff_of_power(const Poly& p, std::size_t var, int e);

// True iff every term has the given weighted degree under the table weights
// (vacuously true for the zero polynomial).
bool is_weighted_homogeneous(const Poly& p, int degree);
// The common weighted degree of all terms, or nullopt if mixed / zero.
std::optional<int> homogeneous_weighted_degree(const Poly& p);

// Polynomial composition: each variable of the source table is mapped to a
// polynomial over a common target table. Missing images are only an error
// when the variable actually occurs.
class Substitution {
public:
    Substitution(VarTablePtr source, VarTablePtr target);

    Substitution& set(std::size_t var, Poly image);
    Substitution& set(std::string_view var, Poly image);

    Poly apply(const Poly& p) const;

    const VarTablePtr& source() const { return source_; }
    const VarTablePtr& target() const { return target_; }

private:
    VarTablePtr source_;
    VarTablePtr target_;
    std::vector<std::optional<Poly>> images_;
};

// Identity substitution on a table (every variable maps to itself).
Substitution identity_substitution(VarTablePtr table);

// Canonical text rendering: terms in ascending plain-lex order (so the
// neg-lex leading term prints first), exact coefficient strings, '*' between
// factors and '^' for exponents, e.g. "-3*V1*W1 + 2*U1*W2".
std::string to_string(const Poly& p);

}  // namespace liftvf
