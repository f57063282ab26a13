#include "liftvf/lift.hpp"

#include <stdexcept>

namespace liftvf {

std::vector<Poly> lift_residual(const CrossCapContext& ctx, const VectorField& xi,
                                const VectorField& eta) {
    if (xi.space != Space::codomain || xi.components.size() != ctx.codomain_dim())
        throw std::invalid_argument("xi must have 2k-1 codomain components");
    if (eta.space != Space::domain || eta.components.size() != ctx.domain_dim())
        throw std::invalid_argument("eta must have 2k-2 domain components");

    const PolyMatrix j = jacobian(ctx);
    const Substitution phi = phi_substitution(ctx);
    std::vector<Poly> residual;
    residual.reserve(ctx.codomain_dim());
    for (std::size_t i = 0; i < ctx.codomain_dim(); ++i) {
        Poly row = Poly::zero(ctx.domain_table());
        for (std::size_t c = 0; c < ctx.domain_dim(); ++c)
            row += j.at(i, c) * eta.components[c];
        row -= phi.apply(xi.components[i]);
        residual.push_back(std::move(row));
    }
    return residual;
}

namespace {

VerifyReport report_for(const CrossCapContext& ctx, const VectorField& xi,
                        const VectorField& eta) {
    VerifyReport rep;
    rep.k = ctx.k();
    rep.label = xi.label;
    rep.residual_terms = 0;
    for (const Poly& p : lift_residual(ctx, xi, eta)) rep.residual_terms += p.term_count();
    rep.ok = rep.residual_terms == 0;
    return rep;
}

}  // namespace

VerifyReport verify_family(const CrossCapContext& ctx, int family, int j) {
    return report_for(ctx, family_field(ctx, family, j), lowerable_field(ctx, family, j));
}

std::pair<VectorField, bool> lift_euler(const CrossCapContext& ctx) {
    VectorField eta = euler_lowerable(ctx);
    const VectorField xi = euler_field(ctx);
    bool ok = true;
    for (const Poly& p : lift_residual(ctx, xi, eta))
        if (!p.is_zero()) ok = false;
    return {std::move(eta), ok};
}

std::vector<VerifyReport> verify_all(const CrossCapContext& ctx) {
    std::vector<VerifyReport> out;
    for (int f = 1; f <= 3; ++f)
        for (int j = 1; j <= ctx.k() - 1; ++j) out.push_back(verify_family(ctx, f, j));
    VerifyReport euler;
    euler.k = ctx.k();
    euler.label = "xi_e";
    const auto [eta, ok] = lift_euler(ctx);
    euler.ok = ok;
    if (!ok) {
        for (const Poly& p : lift_residual(ctx, euler_field(ctx), eta))
            euler.residual_terms += p.term_count();
    }
    out.push_back(euler);
    return out;
}

}  // namespace liftvf
