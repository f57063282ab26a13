#pragma once

#include <vector>

#include "liftvf/crosscap.hpp"
#include "liftvf/vector_field.hpp"

namespace liftvf {

// The three families of liftable vector fields xi^f_j on the codomain,
// 1 <= j <= k-1, reproduced exactly as stated (no normalization). Every
// indexed symbol is dummy-resolved at construction, so no dummy ever appears
// in a stored polynomial.
VectorField family1(const CrossCapContext& ctx, int j);
VectorField family2(const CrossCapContext& ctx, int j);
VectorField family3(const CrossCapContext& ctx, int j);
VectorField family_field(const CrossCapContext& ctx, int family, int j);

// Lowerable partners eta^f_j on the domain, built from the proof templates
// (not from hand-simplified forms); the lift module validates the pairing.
VectorField lowerable1(const CrossCapContext& ctx, int j);
VectorField lowerable23(const CrossCapContext& ctx, int family, int j);
VectorField lowerable_field(const CrossCapContext& ctx, int family, int j);

// eta_e = (w_1 x_1, ..., w_n x_n), the domain Euler field lifting xi_e.
VectorField euler_lowerable(const CrossCapContext& ctx);

// The 3k-2 generators in fixed order: family 1 ascending j, then family 2,
// then family 3, then the Euler field.
std::vector<VectorField> generator_set(const CrossCapContext& ctx);

// Validated constructor: checks the component count for the space and that
// every component vanishes at the origin.
VectorField make_field(const CrossCapContext& ctx, Space space,
                       std::vector<Poly> components, std::string label);

}  // namespace liftvf
