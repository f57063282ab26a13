#include "liftvf/classify.hpp"

#include <random>
#include <stdexcept>

#include "liftvf/fields.hpp"
#include "liftvf/image.hpp"
#include "liftvf/matrix.hpp"

namespace liftvf {

LinearFunction make_linear_function(const CrossCapContext& ctx,
                                    std::vector<Rational> alpha,
                                    std::vector<Rational> beta, Rational gamma1,
                                    Rational gamma2) {
    const int k = ctx.k();
    if (alpha.size() != static_cast<std::size_t>(k - 2))
        throw std::invalid_argument("linear function needs k-2 alpha coefficients");
    if (beta.size() != static_cast<std::size_t>(k - 1))
        throw std::invalid_argument("linear function needs k-1 beta coefficients");
    bool nonzero = gamma1 != 0 || gamma2 != 0;
    for (const auto& a : alpha) nonzero = nonzero || a != 0;
    for (const auto& b : beta) nonzero = nonzero || b != 0;
    if (!nonzero) throw std::invalid_argument("linear function must not be zero");
    return LinearFunction{std::move(alpha), std::move(beta), std::move(gamma1),
                          std::move(gamma2)};
}

Poly linear_poly(const CrossCapContext& ctx, const LinearFunction& h) {
    const VarTablePtr& cod = ctx.codomain_table();
    Poly p = Poly::zero(cod);
    for (int i = 1; i <= ctx.k() - 2; ++i)
        p += h.alpha[i - 1] * Poly::variable(cod, ctx.U_index(i));
    for (int i = 1; i <= ctx.k() - 1; ++i)
        p += h.beta[i - 1] * Poly::variable(cod, ctx.V_index(i));
    p += h.gamma1 * Poly::variable(cod, ctx.W1_index());
    p += h.gamma2 * Poly::variable(cod, ctx.W2_index());
    return p;
}

Poly truncate_mod_m2(const Poly& p) {
    Poly out = Poly::zero(p.table());
    for (const auto& [m, c] : p.terms())
        if (total_degree(m) < 2) out += Poly::monomial(p.table(), m, c);
    return out;
}

Poly field_applied_to_linear(const CrossCapContext& ctx, const VectorField& xi,
                             const LinearFunction& h) {
    if (xi.space != Space::codomain || xi.components.size() != ctx.codomain_dim())
        throw std::invalid_argument("field_applied_to_linear expects a codomain field");
    return apply_field(xi, linear_poly(ctx, h));
}

namespace {

// alpha_i / beta_i with out-of-range indices read as zero.
Rational alpha_at(const LinearFunction& h, int i) {
    if (i < 1 || i > static_cast<int>(h.alpha.size())) return Rational(0);
    return h.alpha[i - 1];
}

Rational beta_at(const LinearFunction& h, int i) {
    if (i < 1 || i > static_cast<int>(h.beta.size())) return Rational(0);
    return h.beta[i - 1];
}

}  // namespace

Poly modulom_closed_form(const CrossCapContext& ctx, int family, int j,
                         const LinearFunction& h) {
    if (j < 1 || j > ctx.k() - 1)
        throw std::invalid_argument("family index requires 1 <= j <= k-1");
    const int k = ctx.k();
    const VarTablePtr& cod = ctx.codomain_table();
    const auto U = [&](int i) { return ctx.resolve_dummy(VarFamily::U, i); };
    const auto V = [&](int i) { return ctx.resolve_dummy(VarFamily::V, i); };
    const Poly W1 = Poly::variable(cod, ctx.W1_index());
    const Poly W2 = Poly::variable(cod, ctx.W2_index());
    Poly out = Poly::zero(cod);

    switch (family) {
        case 1:
            // k(-beta_{k-j} W_2 + sum_{i=k-j+1}^{k-1} beta_i V_{i+j-k})
            out -= Rational(k) * (beta_at(h, k - j) * W2);
            for (int i = k - j + 1; i <= k - 1; ++i)
                out += Rational(k) * (beta_at(h, i) * V(i + j - k));
            return out;
        case 2:
            // sum_{i=j-1}^{k-2} alpha_i (k-i+j-1) U_{i-j+1}
            //   - k sum_{i=j-1}^{k-1} (i-j+1) beta_i V_{i-j+1}
            //   - k(k-j+1) gamma_1 U_{k-j+1} W_1 - k^2 alpha_{j-1} W_1
            for (int i = j - 1; i <= k - 2; ++i)
                out += Rational(k - i + j - 1) * (alpha_at(h, i) * U(i - j + 1));
            for (int i = j - 1; i <= k - 1; ++i)
                out -= Rational(k * (i - j + 1)) * (beta_at(h, i) * V(i - j + 1));
            out -= Rational(k * (k - j + 1)) * (h.gamma1 * (U(k - j + 1) * W1));
            out -= Rational(k * k) * (alpha_at(h, j - 1) * W1);
            return out;
        case 3:
            // k(k-j+1) gamma_1 U_{k+j-1} W_2 - k^2 alpha_{j-1} W_2
            //   + k^2 sum_{i=j}^{k-2} alpha_i V_{i-j+1}
            out += Rational(k * (k - j + 1)) * (h.gamma1 * (U(k + j - 1) * W2));
            out -= Rational(k * k) * (alpha_at(h, j - 1) * W2);
            for (int i = j; i <= k - 2; ++i)
                out += Rational(k * k) * (alpha_at(h, i) * V(i - j + 1));
            return out;
        default:
            throw std::invalid_argument("family must be 1, 2 or 3");
    }
}

std::vector<ClosedFormComparison> compare_closed_forms(const CrossCapContext& ctx,
                                                       const LinearFunction& h) {
    std::vector<ClosedFormComparison> out;
    for (int f = 1; f <= 3; ++f) {
        for (int j = 1; j <= ctx.k() - 1; ++j) {
            const VectorField xi = family_field(ctx, f, j);
            Poly direct = truncate_mod_m2(field_applied_to_linear(ctx, xi, h));
            Poly closed = modulom_closed_form(ctx, f, j, h);
            const bool match = direct == closed;
            out.push_back(ClosedFormComparison{xi.label, std::move(direct),
                                               std::move(closed), match});
        }
    }
    return out;
}

LinearPartMatrix linear_part_matrix(const CrossCapContext& ctx, const LinearFunction& h) {
    const VarTablePtr& cod = ctx.codomain_table();
    LinearPartMatrix m;
    const auto push_row = [&](const std::string& label, const Poly& p) {
        const Poly lin = truncate_mod_m2(p);
        std::vector<Rational> row;
        row.reserve(cod->size());
        for (std::size_t v = 0; v < cod->size(); ++v) {
            Monomial e(cod->size(), 0);
            e[v] = 1;
            row.push_back(lin.coeff(e));
        }
        m.row_labels.push_back(label);
        m.entries.push_back(std::move(row));
    };

    for (int f = 1; f <= 3; ++f)
        for (int j = 1; j <= ctx.k() - 1; ++j) {
            const VectorField xi = family_field(ctx, f, j);
            push_row(xi.label + "(h)", field_applied_to_linear(ctx, xi, h));
        }
    push_row("xi_e(h)", field_applied_to_linear(ctx, euler_field(ctx), h));
    push_row("h", linear_poly(ctx, h));
    return m;
}

Codim1Certificate codim1_certificate(const CrossCapContext& ctx, const LinearFunction& h) {
    const LinearPartMatrix m = linear_part_matrix(ctx, h);
    const std::size_t r = rational_rank(m.entries);
    return Codim1Certificate{r == ctx.codomain_dim(), r};
}

std::uint64_t trial_seed(std::uint64_t root_seed, std::uint64_t trial) {
    return root_seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
}

LinearFunction random_linear_function(const CrossCapContext& ctx, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Engine output is standardized, so avoid the implementation-defined
    // std::uniform_int_distribution for cross-platform reproducibility.
    const auto draw = [&rng]() { return Rational(static_cast<int>(rng() % 19) - 9); };
    const auto draw_nonzero = [&] {
        Rational r = draw();
        while (r == 0) r = draw();
        return r;
    };

    const int k = ctx.k();
    std::vector<Rational> alpha, beta;
    for (int i = 1; i <= k - 2; ++i) alpha.push_back(draw());
    for (int i = 1; i <= k - 1; ++i) beta.push_back(draw());
    if (k > 2) alpha[k - 3] = draw_nonzero();
    beta[k - 2] = draw_nonzero();
    return make_linear_function(ctx, std::move(alpha), std::move(beta), draw(), draw());
}

}  // namespace liftvf
