#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liftvf/crosscap.hpp"
#include "liftvf/vector_field.hpp"

namespace liftvf {

// Coefficient vector of a linear form h = sum alpha_i U_i + sum beta_i V_i
// + gamma_1 W_1 + gamma_2 W_2 on the codomain.
struct LinearFunction {
    std::vector<Rational> alpha;  // k-2 entries
    std::vector<Rational> beta;   // k-1 entries
    Rational gamma1;
    Rational gamma2;
};

// Validates sizes against k and that not all coefficients vanish.
LinearFunction make_linear_function(const CrossCapContext& ctx,
                                    std::vector<Rational> alpha,
                                    std::vector<Rational> beta, Rational gamma1,
                                    Rational gamma2);

// h as a polynomial on the codomain table.
Poly linear_poly(const CrossCapContext& ctx, const LinearFunction& h);

// Drops every term of total degree >= 2; constants and linear terms survive.
Poly truncate_mod_m2(const Poly& p);

// Exact xi(h) (not yet truncated): since dh/dX_c is the constant coeff_c,
// this is sum_c coeff_c * component_c.
Poly field_applied_to_linear(const CrossCapContext& ctx, const VectorField& xi,
                             const LinearFunction& h);

// Literal evaluation of the stated mod-m^2 closed forms for xi^f_j(h), with
// dummy resolution and out-of-range alpha/beta coefficients read as zero.
// The direct computation is normative; mismatches are reported, not patched.
Poly modulom_closed_form(const CrossCapContext& ctx, int family, int j,
                         const LinearFunction& h);

struct ClosedFormComparison {
    std::string label;
    Poly direct;  // truncate_mod_m2(field_applied_to_linear(...))
    Poly closed;  // modulom_closed_form(...)
    bool match;
};

// Compares the closed form against the direct computation for every family
// field of the context.
std::vector<ClosedFormComparison> compare_closed_forms(const CrossCapContext& ctx,
                                                       const LinearFunction& h);

// Rows: mod-m^2 linear parts of xi^f_j(h) for all (f, j), then xi_e(h), then
// h itself; columns: the 2k-1 codomain coordinates.
struct LinearPartMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::vector<Rational>> entries;
};

LinearPartMatrix linear_part_matrix(const CrossCapContext& ctx, const LinearFunction& h);

// Nakayama rank test. certified means the linear parts span the whole
// cotangent space (rank 2k-1), hence the ideal is the maximal ideal and the
// pullback has A_e-codimension 1. Sufficiency only: a smaller rank yields
// "not certified", never a codimension claim.
struct Codim1Certificate {
    bool certified;
    std::size_t rank;
};

Codim1Certificate codim1_certificate(const CrossCapContext& ctx, const LinearFunction& h);

// Reproducible random draw: coefficients uniform in -9..9, with the
// genericity constraints alpha_{k-2} != 0 (when k > 2) and beta_{k-1} != 0
// enforced by redrawing those slots.
LinearFunction random_linear_function(const CrossCapContext& ctx, std::uint64_t seed);

// Per-trial seed derived from a root seed.
std::uint64_t trial_seed(std::uint64_t root_seed, std::uint64_t trial);

}  // namespace liftvf
