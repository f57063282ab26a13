#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liftvf/crosscap.hpp"
#include "liftvf/fields.hpp"

namespace liftvf {

// J_phi * eta - xi o phi_k, componentwise over the domain table. The zero
// vector iff eta lowers xi. Verification is definitional: no identities from
// the liftability proofs are trusted.
std::vector<Poly> lift_residual(const CrossCapContext& ctx, const VectorField& xi,
                                const VectorField& eta);

struct VerifyReport {
    int k = 0;
    std::string label;
    bool ok = false;
    std::size_t residual_terms = 0;  // total monomial count across components
};

// Constructs (xi^f_j, eta^f_j) and checks the lift identity exactly.
VerifyReport verify_family(const CrossCapContext& ctx, int family, int j);

// eta_e = (w_1 x_1, ..., w_n x_n) together with the exactness of its lift.
std::pair<VectorField, bool> lift_euler(const CrossCapContext& ctx);

// All 3(k-1) family pairs plus the Euler pair, in generator order.
std::vector<VerifyReport> verify_all(const CrossCapContext& ctx);

}  // namespace liftvf
