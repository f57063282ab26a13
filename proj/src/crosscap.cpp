#include "liftvf/crosscap.hpp"

#include <stdexcept>
#include <string>

namespace liftvf {

CrossCapContext::CrossCapContext(int k) : k_(k) {
    if (k < 2) throw std::invalid_argument("cross cap multiplicity requires k >= 2");

    std::vector<std::string> dn;
    std::vector<int> dw;
    for (int i = 1; i <= k - 2; ++i) {
        dn.push_back("u" + std::to_string(i));
        dw.push_back(k - i);
    }
    for (int i = 1; i <= k - 1; ++i) {
        dn.push_back("v" + std::to_string(i));
        dw.push_back(k - i);
    }
    dn.push_back("y");
    dw.push_back(1);
    domain_ = VarTable::create(std::move(dn), std::move(dw));

    std::vector<std::string> cn;
    std::vector<int> cd;
    for (int i = 1; i <= k - 2; ++i) {
        cn.push_back("U" + std::to_string(i));
        cd.push_back(k - i);
    }
    for (int i = 1; i <= k - 1; ++i) {
        cn.push_back("V" + std::to_string(i));
        cd.push_back(k - i);
    }
    cn.push_back("W1");
    cd.push_back(k);
    cn.push_back("W2");
    cd.push_back(k);
    codomain_ = VarTable::create(std::move(cn), std::move(cd));
}

std::size_t CrossCapContext::u_index(int i) const {
    if (i < 1 || i > k_ - 2) throw std::out_of_range("u index out of range");
    return static_cast<std::size_t>(i - 1);
}

std::size_t CrossCapContext::v_index(int i) const {
    if (i < 1 || i > k_ - 1) throw std::out_of_range("v index out of range");
    return static_cast<std::size_t>(k_ - 2 + i - 1);
}

std::size_t CrossCapContext::U_index(int i) const {
    if (i < 1 || i > k_ - 2) throw std::out_of_range("U index out of range");
    return static_cast<std::size_t>(i - 1);
}

std::size_t CrossCapContext::V_index(int i) const {
    if (i < 1 || i > k_ - 1) throw std::out_of_range("V index out of range");
    return static_cast<std::size_t>(k_ - 2 + i - 1);
}

Poly CrossCapContext::resolve_dummy(VarFamily family, int index) const {
    const bool capital = family == VarFamily::U || family == VarFamily::V;
    const VarTablePtr& table = capital ? codomain_ : domain_;
    const bool u_like = family == VarFamily::U || family == VarFamily::u;

    if (u_like) {
        if (index >= 1 && index <= k_ - 2)
            return Poly::variable(table, capital ? U_index(index) : u_index(index));
        if (index == k_) return Poly::constant(table, Rational(1));
        return Poly::zero(table);  // U_{k-1}, indices <= 0 and > k
    }
    if (index >= 1 && index <= k_ - 1)
        return Poly::variable(table, capital ? V_index(index) : v_index(index));
    return Poly::zero(table);  // V_k, indices <= 0 and > k
}

MapGerm build_phi(const CrossCapContext& ctx) {
    const int k = ctx.k();
    const VarTablePtr& dom = ctx.domain_table();
    MapGerm phi{k, {}};
    for (std::size_t i = 0; i + 1 < dom->size(); ++i)
        phi.components.push_back(Poly::variable(dom, i));

    const Poly y = Poly::variable(dom, ctx.y_index());
    Poly yi = y;  // y^i, built incrementally
    Poly w1 = Poly::zero(dom);
    Poly w2 = Poly::zero(dom);
    for (int i = 1; i <= k; ++i) {
        w1 += ctx.resolve_dummy(VarFamily::u, i) * yi;
        w2 += ctx.resolve_dummy(VarFamily::v, i) * yi;
        if (i < k) yi = yi * y;
    }
    phi.components.push_back(std::move(w1));
    phi.components.push_back(std::move(w2));
    return phi;
}

PolyMatrix jacobian(const CrossCapContext& ctx) {
    const MapGerm phi = build_phi(ctx);
    PolyMatrix j(ctx.codomain_dim(), ctx.domain_dim(), ctx.domain_table());
    for (std::size_t i = 0; i < j.rows(); ++i)
        for (std::size_t c = 0; c < j.cols(); ++c)
            j.at(i, c) = partial_derivative(phi.components[i], c);
    return j;
}

VectorField euler_field(const CrossCapContext& ctx) {
    const VarTablePtr& cod = ctx.codomain_table();
    VectorField xi{Space::codomain, {}, "xi_e"};
    for (std::size_t i = 0; i < cod->size(); ++i)
        xi.components.push_back(Rational(cod->weight(i)) * Poly::variable(cod, i));
    return xi;
}

bool check_quasihomogeneous(const CrossCapContext& ctx, const MapGerm& phi) {
    if (phi.components.size() != ctx.codomain_dim())
        throw std::invalid_argument("map germ has the wrong component count");
    for (std::size_t i = 0; i < phi.components.size(); ++i)
        if (!is_weighted_homogeneous(phi.components[i], ctx.codomain_table()->weight(i)))
            return false;
    return true;
}

Substitution phi_substitution(const CrossCapContext& ctx) {
    const MapGerm phi = build_phi(ctx);
    Substitution s(ctx.codomain_table(), ctx.domain_table());
    for (std::size_t i = 0; i < phi.components.size(); ++i)
        s.set(i, phi.components[i]);
    return s;
}

}  // namespace liftvf
