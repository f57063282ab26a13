#pragma once

#include <vector>

#include "liftvf/matrix.hpp"
#include "liftvf/poly.hpp"
#include "liftvf/vector_field.hpp"

namespace liftvf {

// Which indexed symbol family a dummy-resolved lookup refers to: capital
// letters live on the codomain, lowercase on the domain.
enum class VarFamily { U, V, u, v };

// The minimal cross cap of multiplicity k maps (u_1..u_{k-2}, v_1..v_{k-1}, y)
// to (U_1..U_{k-2}, V_1..V_{k-1}, W_1, W_2). Domain weights are
// w(u_i) = w(v_i) = k-i, w(y) = 1; codomain degrees are d(U_i) = d(V_i) = k-i,
// d(W_1) = d(W_2) = k. Immutable after construction.
class CrossCapContext {
public:
    explicit CrossCapContext(int k);

    int k() const { return k_; }
    const VarTablePtr& domain_table() const { return domain_; }
    const VarTablePtr& codomain_table() const { return codomain_; }

    std::size_t domain_dim() const { return domain_->size(); }     // 2k-2
    std::size_t codomain_dim() const { return codomain_->size(); } // 2k-1

    // 0-based slots of the named coordinates.
    std::size_t u_index(int i) const;  // 1 <= i <= k-2
    std::size_t v_index(int i) const;  // 1 <= i <= k-1
    std::size_t y_index() const { return domain_->size() - 1; }
    std::size_t U_index(int i) const;
    std::size_t V_index(int i) const;
    std::size_t W1_index() const { return codomain_->size() - 2; }
    std::size_t W2_index() const { return codomain_->size() - 1; }

    // Index convention closing the family formulas: U_k = u_k = 1,
    // U_{k-1} = V_k = 0, and every index <= 0 or > k resolves to 0. In-range
    // indices return the actual variable. Total on all integer inputs.
    Poly resolve_dummy(VarFamily family, int index) const;

private:
    int k_;
    VarTablePtr domain_;
    VarTablePtr codomain_;
};

// The cross cap map germ: components of phi_k over the domain table.
struct MapGerm {
    int k;
    std::vector<Poly> components;  // 2k-1 entries
};

// phi_k = (u_1,...,u_{k-2}, v_1,...,v_{k-1},
//          y^k + sum u_i y^i, sum v_i y^i).
MapGerm build_phi(const CrossCapContext& ctx);

// Jacobian of phi_k: (2k-1) x (2k-2), entry (i,j) = d(component_i)/d(var_j).
PolyMatrix jacobian(const CrossCapContext& ctx);

// Euler vector field on the codomain: component d_i * X_i per coordinate.
VectorField euler_field(const CrossCapContext& ctx);

// Checks the quasihomogeneity relation as a polynomial identity: every
// monomial of component j has weighted degree exactly d_j.
bool check_quasihomogeneous(const CrossCapContext& ctx, const MapGerm& phi);

// Substitution realizing composition with phi_k (codomain -> domain).
Substitution phi_substitution(const CrossCapContext& ctx);

}  // namespace liftvf
