#include "liftvf/fields.hpp"

#include <stdexcept>

namespace liftvf {

namespace {

void check_j(const CrossCapContext& ctx, int j) {
    if (j < 1 || j > ctx.k() - 1)
        throw std::invalid_argument("family index requires 1 <= j <= k-1");
}

std::string family_label(const char* prefix, int family, int j) {
    return std::string(prefix) + std::to_string(family) + "_" + std::to_string(j);
}

}  // namespace

VectorField make_field(const CrossCapContext& ctx, Space space,
                       std::vector<Poly> components, std::string label) {
    const std::size_t expect =
        space == Space::domain ? ctx.domain_dim() : ctx.codomain_dim();
    if (components.size() != expect)
        throw std::invalid_argument("vector field has the wrong component count");
    const Monomial origin(space == Space::domain ? ctx.domain_dim() : ctx.codomain_dim(), 0);
    for (const Poly& c : components)
        if (c.coeff(origin) != 0)
            throw std::invalid_argument("vector field component does not vanish at the origin");
    return VectorField{space, std::move(components), std::move(label)};
}

VectorField family1(const CrossCapContext& ctx, int j) {
    check_j(ctx, j);
    const int k = ctx.k();
    const auto U = [&](int i) { return ctx.resolve_dummy(VarFamily::U, i); };
    const auto V = [&](int i) { return ctx.resolve_dummy(VarFamily::V, i); };
    const Poly W1 = Poly::variable(ctx.codomain_table(), ctx.W1_index());
    const Poly W2 = Poly::variable(ctx.codomain_table(), ctx.W2_index());

    std::vector<Poly> comp;
    for (int i = 1; i <= k - 2; ++i)
        comp.push_back(Rational((k - i) * (k - j)) * (U(i) * U(j)));
    for (int i = 1; i <= k - 1; ++i) {
        Poly b = Poly::zero(ctx.codomain_table());
        for (int r = 1; r <= i - 1; ++r) b += Rational(k) * (U(i + j - r) * V(r));
        for (int r = 1; r <= i; ++r) b -= Rational(k) * (U(r) * V(i + j - r));
        b -= Rational((i - 1) * (k - j)) * (U(j) * V(i));
        b += Rational(k) * (V(i + j) * W1);
        b -= Rational(k) * (U(i + j) * W2);
        comp.push_back(std::move(b));
    }
    comp.push_back(Rational(k * (k - j)) * (U(j) * W1));
    comp.push_back(Rational(-k) * (V(j) * W1) + Rational(k - j) * (U(j) * W2));
    return make_field(ctx, Space::codomain, std::move(comp), family_label("xi", 1, j));
}

VectorField family2(const CrossCapContext& ctx, int j) {
    check_j(ctx, j);
    const int k = ctx.k();
    const auto U = [&](int i) { return ctx.resolve_dummy(VarFamily::U, i); };
    const auto V = [&](int i) { return ctx.resolve_dummy(VarFamily::V, i); };
    const Poly W1 = Poly::variable(ctx.codomain_table(), ctx.W1_index());

    std::vector<Poly> comp;
    for (int i = 1; i <= k - 2; ++i) {
        Poly a = Rational(-k * (k + i - j + 1)) * (U(k + i - j + 1) * W1);
        for (int r = 1; r <= i; ++r)
            a += Rational(k * (k + i - j - 2 * r + 1)) * (U(r) * U(k + i - j - r + 1));
        a -= Rational(j * (i + 1)) * (U(i + 1) * U(k - j));
        comp.push_back(std::move(a));
    }
    for (int i = 1; i <= k - 1; ++i) {
        Poly b = Rational(-k * (k + i - j + 1)) * (V(k + i - j + 1) * W1);
        for (int r = 1; r <= i; ++r)
            b += Rational(k * (k + i - j - r + 1)) * (U(r) * V(k + i - j - r + 1));
        for (int r = 1; r <= i; ++r)
            b -= Rational(k * r) * (U(k + i - j - r + 1) * V(r));
        b -= Rational(j * (i + 1)) * (U(k - j) * V(i + 1));
        comp.push_back(std::move(b));
    }
    comp.push_back(Rational(k * (k - j + 1)) * (U(k - j + 1) * W1) +
                   Rational(j) * (U(1) * U(k - j)));
    comp.push_back(Rational(k * (k - j + 1)) * (V(k - j + 1) * W1) +
                   Rational(j) * (V(1) * U(k - j)));
    return make_field(ctx, Space::codomain, std::move(comp), family_label("xi", 2, j));
}

VectorField family3(const CrossCapContext& ctx, int j) {
    check_j(ctx, j);
    const int k = ctx.k();
    const auto U = [&](int i) { return ctx.resolve_dummy(VarFamily::U, i); };
    const auto V = [&](int i) { return ctx.resolve_dummy(VarFamily::V, i); };
    const Poly W2 = Poly::variable(ctx.codomain_table(), ctx.W2_index());

    std::vector<Poly> comp;
    for (int i = 1; i <= k - 2; ++i) {
        Poly a = Rational(-k * (k + i - j + 1)) * (U(k + i - j + 1) * W2);
        for (int r = 1; r <= i; ++r)
            a += Rational(k * (k + i - j - r + 1)) * (U(k + i - j - r + 1) * V(r));
        for (int r = 1; r <= i; ++r)
            a -= Rational(k * r) * (U(r) * V(k + i - j - r + 1));
        a -= Rational(k * (i + 1)) * (U(i + 1) * V(k - j));
        comp.push_back(std::move(a));
    }
    for (int i = 1; i <= k - 1; ++i) {
        Poly b = Rational(-k * (k + i - j + 1)) * (V(k + i - j + 1) * W2);
        for (int r = 1; r <= i; ++r)
            b += Rational(k * (k + i - j - 2 * r + 1)) * (V(r) * V(k + i - j - r + 1));
        b -= Rational(k * (i + 1)) * (V(i + 1) * V(k - j));
        comp.push_back(std::move(b));
    }
    comp.push_back(Rational(k * (k - j + 1)) * (U(k - j + 1) * W2) +
                   Rational(k) * (U(1) * V(k - j)));
    comp.push_back(Rational(k * (k - j + 1)) * (V(k - j + 1) * W2) +
                   Rational(k) * (V(1) * V(k - j)));
    return make_field(ctx, Space::codomain, std::move(comp), family_label("xi", 3, j));
}

VectorField family_field(const CrossCapContext& ctx, int family, int j) {
    switch (family) {
        case 1: return family1(ctx, j);
        case 2: return family2(ctx, j);
        case 3: return family3(ctx, j);
        default: throw std::invalid_argument("family must be 1, 2 or 3");
    }
}

VectorField euler_lowerable(const CrossCapContext& ctx) {
    const VarTablePtr& dom = ctx.domain_table();
    std::vector<Poly> comp;
    for (std::size_t i = 0; i < dom->size(); ++i)
        comp.push_back(Rational(dom->weight(i)) * Poly::variable(dom, i));
    return make_field(ctx, Space::domain, std::move(comp), "eta_e");
}

VectorField lowerable1(const CrossCapContext& ctx, int j) {
    check_j(ctx, j);
    const int k = ctx.k();
    const VarTablePtr& dom = ctx.domain_table();
    const auto u = [&](int i) { return ctx.resolve_dummy(VarFamily::u, i); };
    const auto v = [&](int i) { return ctx.resolve_dummy(VarFamily::v, i); };
    const Poly y = Poly::variable(dom, ctx.y_index());

    // W_1 and W_2 rewritten in domain variables: sum_{i=1}^k u_i y^i and
    // sum_{i=1}^k v_i y^i with u_k = 1, u_{k-1} = v_k = 0.
    Poly w1 = Poly::zero(dom);
    Poly w2 = Poly::zero(dom);
    Poly yi = y;
    for (int i = 1; i <= k; ++i) {
        w1 += u(i) * yi;
        w2 += v(i) * yi;
        if (i < k) yi = yi * y;
    }

    // eta-tilde: a = 0, c = 0, and the b-block below; then add the Euler
    // correction (k-j) u_j eta_e undoing the subtraction in the proof.
    std::vector<Poly> comp;
    for (int i = 1; i <= k - 2; ++i) comp.push_back(Poly::zero(dom));
    for (int i = 1; i <= k - 1; ++i) {
        Poly b = Poly::zero(dom);
        for (int r = 1; r <= i - 1; ++r) b += Rational(k) * (u(i + j - r) * v(r));
        for (int r = 1; r <= i; ++r) b -= Rational(k) * (u(r) * v(i + j - r));
        b -= Rational((k - 1) * (k - j)) * (u(j) * v(i));
        b += Rational(k) * (v(i + j) * w1);
        b -= Rational(k) * (u(i + j) * w2);
        comp.push_back(std::move(b));
    }
    comp.push_back(Poly::zero(dom));

    const Poly uj = u(j);
    const VectorField eta_e = euler_lowerable(ctx);
    for (std::size_t i = 0; i < comp.size(); ++i)
        comp[i] += Rational(k - j) * (uj * eta_e.components[i]);
    return make_field(ctx, Space::domain, std::move(comp), family_label("eta", 1, j));
}

VectorField lowerable23(const CrossCapContext& ctx, int family, int j) {
    if (family != 2 && family != 3)
        throw std::invalid_argument("lowerable23 requires family 2 or 3");
    check_j(ctx, j);
    const int k = ctx.k();
    const VarTablePtr& dom = ctx.domain_table();
    const VarFamily xf = family == 2 ? VarFamily::u : VarFamily::v;
    const auto x = [&](int i) { return ctx.resolve_dummy(xf, i); };
    const Poly y = Poly::variable(dom, ctx.y_index());

    // X = sum_{i=1}^k x_i y^i (equals W_1 or W_2 composed with phi_k).
    Poly X = Poly::zero(dom);
    {
        Poly yi = y;
        for (int i = 1; i <= k; ++i) {
            X += x(i) * yi;
            if (i < k) yi = yi * y;
        }
    }

    // alpha_{i,j} from the unified template, with z picked per block.
    const auto alpha = [&](int i, VarFamily zf) {
        const auto z = [&](int r) { return ctx.resolve_dummy(zf, r); };
        Poly a = Rational(-k * (k + i - j + 1)) * (z(k + i - j + 1) * X);
        for (int r = 1; r <= i; ++r)
            a += Rational(k * (k + i - j - r + 1)) * (x(r) * z(k + i - j - r + 1));
        for (int r = 1; r <= i + 1; ++r)
            a -= Rational(k * r) * (x(k + i - j - r + 1) * z(r));
        a += Rational((k - j) * (i + 1)) * (x(k) * x(k - j) * z(i + 1));
        return a;
    };

    std::vector<Poly> comp;
    for (int i = 1; i <= k - 2; ++i) comp.push_back(alpha(i, VarFamily::u));
    for (int i = 1; i <= k - 1; ++i) comp.push_back(alpha(i, VarFamily::v));

    // c_j = k sum_{r=1}^j x_{k-j+r} y^r + x_{k-j} (k - (k-j) x_k).
    Poly c = Poly::zero(dom);
    {
        Poly yr = y;
        for (int r = 1; r <= j; ++r) {
            c += Rational(k) * (x(k - j + r) * yr);
            if (r < j) yr = yr * y;
        }
    }
    c += x(k - j) * (Poly::constant(dom, Rational(k)) - Rational(k - j) * x(k));
    comp.push_back(std::move(c));

    return make_field(ctx, Space::domain, std::move(comp), family_label("eta", family, j));
}

VectorField lowerable_field(const CrossCapContext& ctx, int family, int j) {
    if (family == 1) return lowerable1(ctx, j);
    return lowerable23(ctx, family, j);
}

std::vector<VectorField> generator_set(const CrossCapContext& ctx) {
    std::vector<VectorField> out;
    for (int f = 1; f <= 3; ++f)
        for (int j = 1; j <= ctx.k() - 1; ++j) out.push_back(family_field(ctx, f, j));
    out.push_back(euler_field(ctx));
    return out;
}

}  // namespace liftvf
