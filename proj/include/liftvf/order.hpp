#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftvf/crosscap.hpp"
#include "liftvf/image.hpp"
#include "liftvf/vector_field.hpp"

namespace liftvf {

// Negative lexicographic comparison in the fixed variable order: a > b iff
// the first nonzero entry of exponents(a) - exponents(b) is negative. This
// is a local (non-well) ordering; 1 beats every variable. Returns +1 when
// a > b, -1 when a < b, 0 on equality. Throws on length mismatch.
int compare_neglex(const Monomial& a, const Monomial& b);

// Leading term of a module element: coefficient, monomial and 1-based
// component position, maximal under neg-lex with monomial ties broken
// towards the larger position.
struct ModuleTerm {
    Rational coeff;
    Monomial monomial;
    int position;  // 1..2k-1
};

ModuleTerm leading_term(const CrossCapContext& ctx, const VectorField& xi);

// The grade delta of a graded codomain field: component i is weighted
// homogeneous of degree d_i + delta. Throws on a non-graded or zero field.
int weighted_degree(const CrossCapContext& ctx, const VectorField& xi);

// What the liftability paper's leading-term table states for a generator on
// its stated ranges, or nullopt for the entries the table skips.
struct ExpectedLeadingTerm {
    std::string monomial_name;  // "W1" or "W2"
    int position;
};
std::optional<ExpectedLeadingTerm> paper_leading_term(const CrossCapContext& ctx,
                                                      const std::string& label);

// All monomials of the given weighted degree over a weighted table, in
// descending plain-lex order. Degree 0 yields exactly the unit monomial.
std::vector<Monomial> monomials_of_weighted_degree(const VarTablePtr& table, int degree);

struct DegreeReport {
    int delta;
    std::size_t tangent_dim;  // graded fields xi with xi(h_V) in <h_V>
    std::size_t span_dim;     // slice of the span of generator multiples
    bool ok;
};

struct MembershipReport {
    int k;
    std::vector<DegreeReport> per_degree;
    bool ok;
};

// Degree-by-degree generation evidence: for each grade delta up to the
// bound, compares the dimension of the space of graded tangent fields
// (solutions of xi(h_V) - q h_V = 0, a rational linear system) with the
// dimension of the degree slice spanned by monomial multiples of the 3k-2
// generators. Valid because h_V and all generators are weighted homogeneous.
MembershipReport graded_membership_check(const CrossCapContext& ctx,
                                         const ImageEquation& img, int degree_bound);

}  // namespace liftvf
