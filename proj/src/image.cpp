#include "liftvf/image.hpp"

#include <stdexcept>

namespace liftvf {

PolyMatrix multiplication_matrix(const CrossCapContext& ctx) {
    const int k = ctx.k();
    const VarTablePtr& cod = ctx.codomain_table();
    const Poly w1 = Poly::variable(cod, ctx.W1_index());

    // Current representative f * y^c as coordinates in the basis 1..y^{k-1}.
    std::vector<Poly> coords(k, Poly::zero(cod));
    for (int i = 1; i <= k - 1; ++i) coords[i] = Poly::variable(cod, ctx.V_index(i));

    PolyMatrix m(k, k, cod);
    for (int c = 0; c < k; ++c) {
        for (int r = 0; r < k; ++r) m.at(r, c) = coords[r];
        // Multiply by y and rewrite y^k as W_1 - sum U_i y^i.
        Poly overflow = coords[k - 1];
        for (int r = k - 1; r >= 1; --r) coords[r] = coords[r - 1];
        coords[0] = overflow * w1;
        for (int i = 1; i <= k - 2; ++i)
            coords[i] -= overflow * Poly::variable(cod, ctx.U_index(i));
    }
    return m;
}

ImageEquation image_equation(const CrossCapContext& ctx) {
    const int k = ctx.k();
    PolyMatrix m = multiplication_matrix(ctx);
    const Poly w2 = Poly::variable(ctx.codomain_table(), ctx.W2_index());
    for (int i = 0; i < k; ++i) m.at(i, i) -= w2;
    Poly h = determinant(m);

    if (degree_in(h, ctx.W2_index()) != k)
        throw std::logic_error("image equation: W2-degree is not k");
    const Poly lead = coeff_of_power(h, ctx.W2_index(), k);
    if (!lead.is_constant() || lead.constant_value() != (k % 2 == 0 ? 1 : -1))
        throw std::logic_error("image equation: leading W2-coefficient is not (-1)^k");
    return ImageEquation{k, std::move(h)};
}

Poly apply_field(const VectorField& xi, const Poly& p) {
    if (xi.space != Space::codomain)
        throw std::invalid_argument("apply_field expects a codomain field");
    if (xi.components.size() != p.table()->size() ||
        !xi.components.front().table()->same_as(*p.table()))
        throw std::invalid_argument("apply_field: field and polynomial tables differ");
    Poly out = Poly::zero(p.table());
    for (std::size_t i = 0; i < xi.components.size(); ++i) {
        if (xi.components[i].is_zero()) continue;
        out += xi.components[i] * partial_derivative(p, i);
    }
    return out;
}

TangencyResult tangency_factor(const CrossCapContext& ctx, const ImageEquation& img,
                               const VectorField& xi) {
    const Poly d = apply_field(xi, img.h);
    auto [q, r] = exact_div_univariate(d, img.h, ctx.W2_index());
    return TangencyResult{r.is_zero(), std::move(q), std::move(r)};
}

bool derlog0_check(const ImageEquation& img, const VectorField& xi) {
    return apply_field(xi, img.h).is_zero();
}

}  // namespace liftvf
