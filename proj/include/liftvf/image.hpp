#pragma once

#include "liftvf/crosscap.hpp"
#include "liftvf/matrix.hpp"
#include "liftvf/vector_field.hpp"

namespace liftvf {

// Defining equation h_V of the image of phi_k. By construction
// deg_{W_2}(h) = k with leading coefficient (-1)^k, and h o phi_k = 0.
struct ImageEquation {
    int k;
    Poly h;  // over the codomain table
};

// k x k matrix of multiplication by f(y) = sum V_i y^i on the basis
// 1, y, ..., y^{k-1} of the quotient by g(y) = y^k + sum U_i y^i - W_1;
// column c holds the coordinates of f * y^c reduced mod g. Entries are
// polynomials in U, V and W_1 only.
PolyMatrix multiplication_matrix(const CrossCapContext& ctx);

// h_V = det(M - W_2 I_k), unnormalized. Throws std::logic_error if the
// W_2-degree or its leading coefficient comes out wrong (construction bug);
// the vanishing h o phi = 0 is asserted by the test suites.
ImageEquation image_equation(const CrossCapContext& ctx);

// Directional derivative: xi acting on p as the derivation
// sum_i xi_i * dp/dX_i.
Poly apply_field(const VectorField& xi, const Poly& p);

struct TangencyResult {
    bool tangent;    // xi(h_V) lies in <h_V>
    Poly factor;     // quotient when tangent
    Poly remainder;  // nonzero witness otherwise
};

// Divides xi(h_V) by h_V as univariate polynomials in W_2 (the leading
// coefficient there is the unit (-1)^k).
TangencyResult tangency_factor(const CrossCapContext& ctx, const ImageEquation& img,
                               const VectorField& xi);

// True iff xi annihilates h_V exactly.
bool derlog0_check(const ImageEquation& img, const VectorField& xi);

}  // namespace liftvf
