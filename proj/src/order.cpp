#include "liftvf/order.hpp"

#include <map>
#include <stdexcept>

#include "liftvf/fields.hpp"
#include "liftvf/matrix.hpp"

namespace liftvf {

int compare_neglex(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("neg-lex comparison across different tables");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

ModuleTerm leading_term(const CrossCapContext& ctx, const VectorField& xi) {
    if (xi.space != Space::codomain || xi.components.size() != ctx.codomain_dim())
        throw std::invalid_argument("leading_term expects a codomain field");
    std::optional<ModuleTerm> best;
    for (std::size_t c = 0; c < xi.components.size(); ++c) {
        const Poly& p = xi.components[c];
        if (p.is_zero()) continue;
        // Map order is descending plain lex, so the last entry is neg-lex max.
        const auto& [m, coeff] = *p.terms().rbegin();
        const int pos = static_cast<int>(c) + 1;
        if (!best || compare_neglex(m, best->monomial) > 0 ||
            (compare_neglex(m, best->monomial) == 0 && pos > best->position))
            best = ModuleTerm{coeff, m, pos};
    }
    if (!best) throw std::invalid_argument("leading term of the zero field");
    return *best;
}

int weighted_degree(const CrossCapContext& ctx, const VectorField& xi) {
    if (xi.space != Space::codomain || xi.components.size() != ctx.codomain_dim())
        throw std::invalid_argument("weighted_degree expects a codomain field");
    std::optional<int> delta;
    for (std::size_t c = 0; c < xi.components.size(); ++c) {
        const auto d = homogeneous_weighted_degree(xi.components[c]);
        if (!d && !xi.components[c].is_zero())
            throw std::invalid_argument("field is not graded");
        if (!d) continue;
        const int here = *d - ctx.codomain_table()->weight(c);
        if (!delta)
            delta = here;
        else if (*delta != here)
            throw std::invalid_argument("field is not graded");
    }
    if (!delta) throw std::invalid_argument("weighted degree of the zero field");
    return *delta;
}

std::optional<ExpectedLeadingTerm> paper_leading_term(const CrossCapContext& ctx,
                                                      const std::string& label) {
    const int k = ctx.k();
    const int p = 2 * k;  // codomain dimension + 1
    if (label == "xi_e") return ExpectedLeadingTerm{"W2", p - 1};
    if (label.size() < 5 || label.compare(0, 2, "xi") != 0) return std::nullopt;
    const int family = label[2] - '0';
    const int j = std::stoi(label.substr(4));
    switch (family) {
        case 1:
            if (j >= 1 && j <= k - 2) return ExpectedLeadingTerm{"W2", p - j - 2};
            return std::nullopt;  // the table skips xi1_{k-1}
        case 2:
            if (j == 1) return ExpectedLeadingTerm{"W1", p - 2};
            if (j >= 2 && j <= k - 2) return ExpectedLeadingTerm{"W1", j - 1};
            return std::nullopt;  // the table skips xi2_{k-1}
        case 3:
            if (j == 1) return ExpectedLeadingTerm{"W2", p - 2};
            if (j >= 2 && j <= k - 1) return ExpectedLeadingTerm{"W2", j - 1};
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

namespace {

void enumerate_monomials(const VarTable& table, std::size_t var, int remaining,
                         Monomial& current, std::vector<Monomial>& out) {
    if (var == table.size()) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    const int w = table.weight(var);
    const int max_e = w > 0 ? remaining / w : 0;
    for (int e = 0; e <= max_e; ++e) {
        current[var] = e;
        enumerate_monomials(table, var + 1, remaining - e * w, current, out);
    }
    current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_weighted_degree(const VarTablePtr& table, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial current(table->size(), 0);
    enumerate_monomials(*table, 0, degree, current, out);
    std::sort(out.begin(), out.end(), MonomialLexGreater{});
    return out;
}

namespace {

// Index space for coefficient vectors of a graded field: one coordinate per
// (component position, monomial of the matching slice degree).
struct SliceCoords {
    std::vector<std::vector<Monomial>> basis;        // per position
    std::vector<std::size_t> offset;                 // per position
    std::vector<std::map<Monomial, std::size_t, MonomialLexGreater>> lookup;
    std::size_t total = 0;

    SliceCoords(const CrossCapContext& ctx, int delta) {
        const auto& cod = ctx.codomain_table();
        basis.resize(cod->size());
        offset.resize(cod->size());
        lookup.resize(cod->size());
        for (std::size_t i = 0; i < cod->size(); ++i) {
            offset[i] = total;
            basis[i] = monomials_of_weighted_degree(cod, cod->weight(i) + delta);
            for (std::size_t b = 0; b < basis[i].size(); ++b)
                lookup[i].emplace(basis[i][b], b);
            total += basis[i].size();
        }
    }
};

}  // namespace

MembershipReport graded_membership_check(const CrossCapContext& ctx,
                                         const ImageEquation& img, int degree_bound) {
    const auto& cod = ctx.codomain_table();
    const Poly& h = img.h;
    std::vector<Poly> partials;
    for (std::size_t i = 0; i < cod->size(); ++i)
        partials.push_back(partial_derivative(h, i));

    const std::vector<VectorField> gens = generator_set(ctx);
    std::vector<int> gen_delta;
    for (const auto& g : gens) gen_delta.push_back(weighted_degree(ctx, g));

    MembershipReport report{ctx.k(), {}, true};
    // Grades below -k give empty slices on both sides; scan the nontrivial
    // negative grades too since a tangent field there would escape the span.
    for (int delta = -ctx.k(); delta <= degree_bound; ++delta) {
        const SliceCoords coords(ctx, delta);
        const std::vector<Monomial> qbasis = monomials_of_weighted_degree(cod, delta);

        // (a) tangent slice: nullity of the system xi(h) - q h = 0 in the
        // coefficients of xi and q. The projection onto xi is injective, so
        // the nullity equals the dimension of the tangent slice.
        const std::size_t cols = coords.total + qbasis.size();
        std::map<Monomial, std::size_t, MonomialLexGreater> row_of;
        std::vector<std::vector<Rational>> eqs;
        const auto row_for = [&](const Monomial& m) -> std::vector<Rational>& {
            const auto [it, inserted] = row_of.emplace(m, eqs.size());
            if (inserted) eqs.emplace_back(cols, Rational(0));
            return eqs[it->second];
        };
        for (std::size_t i = 0; i < cod->size(); ++i) {
            for (std::size_t b = 0; b < coords.basis[i].size(); ++b) {
                const std::size_t col = coords.offset[i] + b;
                const Poly prod =
                    Poly::monomial(cod, coords.basis[i][b], Rational(1)) * partials[i];
                for (const auto& [m, c] : prod.terms()) row_for(m)[col] += c;
            }
        }
        for (std::size_t b = 0; b < qbasis.size(); ++b) {
            const std::size_t col = coords.total + b;
            const Poly prod = Poly::monomial(cod, qbasis[b], Rational(1)) * h;
            for (const auto& [m, c] : prod.terms()) row_for(m)[col] -= c;
        }
        const std::size_t tangent_dim = cols - rational_rank(std::move(eqs));

        // (b) slice of the generator span.
        std::vector<std::vector<Rational>> span_rows;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gen_delta[g] > delta) continue;
            for (const Monomial& m : monomials_of_weighted_degree(cod, delta - gen_delta[g])) {
                std::vector<Rational> row(coords.total, Rational(0));
                const Poly mono = Poly::monomial(cod, m, Rational(1));
                for (std::size_t i = 0; i < cod->size(); ++i) {
                    if (gens[g].components[i].is_zero()) continue;
                    const Poly comp = mono * gens[g].components[i];
                    for (const auto& [mm, cc] : comp.terms())
                        row[coords.offset[i] + coords.lookup[i].at(mm)] = cc;
                }
                span_rows.push_back(std::move(row));
            }
        }
        const std::size_t span_dim = rational_rank(std::move(span_rows));

        const bool ok = tangent_dim == span_dim;
        report.per_degree.push_back(DegreeReport{delta, tangent_dim, span_dim, ok});
        if (!ok) report.ok = false;
    }
    return report;
}

}  // namespace liftvf
