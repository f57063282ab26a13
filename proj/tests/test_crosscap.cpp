#include <doctest.h>

#include <stdexcept>

#include "liftvf/crosscap.hpp"
#include "liftvf/json_io.hpp"

using namespace liftvf;

namespace {

Poly dvar(const CrossCapContext& ctx, const char* name) {
    return Poly::variable(ctx.domain_table(), *ctx.domain_table()->index_of(name));
}

}  // namespace

TEST_CASE("build_context lays out tables, weights and degrees") {
    CHECK_THROWS_AS(CrossCapContext(1), std::invalid_argument);

    const CrossCapContext c2(2);
    CHECK(c2.domain_table()->names() == std::vector<std::string>{"v1", "y"});
    CHECK(c2.codomain_table()->names() == std::vector<std::string>{"V1", "W1", "W2"});

    const CrossCapContext c3(3);
    CHECK(c3.domain_table()->names() == std::vector<std::string>{"u1", "v1", "v2", "y"});
    CHECK(c3.codomain_table()->names() ==
          std::vector<std::string>{"U1", "V1", "V2", "W1", "W2"});
    const std::vector<int> degrees{2, 2, 1, 3, 3};
    for (std::size_t i = 0; i < degrees.size(); ++i)
        CHECK(c3.codomain_table()->weight(i) == degrees[i]);
    const std::vector<int> weights{2, 2, 1, 1};
    for (std::size_t i = 0; i < weights.size(); ++i)
        CHECK(c3.domain_table()->weight(i) == weights[i]);

    for (int k = 2; k <= 6; ++k) {
        const CrossCapContext ctx(k);
        CHECK(ctx.domain_dim() == static_cast<std::size_t>(2 * k - 2));
        CHECK(ctx.codomain_dim() == static_cast<std::size_t>(2 * k - 1));
    }
}

TEST_CASE("dummy variable resolution") {
    const CrossCapContext ctx(3);
    CHECK(ctx.resolve_dummy(VarFamily::U, 3) ==
          Poly::constant(ctx.codomain_table(), Rational(1)));
    CHECK(ctx.resolve_dummy(VarFamily::V, 3).is_zero());
    CHECK(ctx.resolve_dummy(VarFamily::U, 1) ==
          Poly::variable(ctx.codomain_table(), ctx.U_index(1)));
    CHECK(ctx.resolve_dummy(VarFamily::U, 2).is_zero());  // U_{k-1}
    CHECK(ctx.resolve_dummy(VarFamily::U, 0).is_zero());
    CHECK(ctx.resolve_dummy(VarFamily::U, -2).is_zero());
    CHECK(ctx.resolve_dummy(VarFamily::U, 4).is_zero());
    CHECK(ctx.resolve_dummy(VarFamily::V, 2) ==
          Poly::variable(ctx.codomain_table(), ctx.V_index(2)));
    CHECK(ctx.resolve_dummy(VarFamily::v, 3).is_zero());
    CHECK(ctx.resolve_dummy(VarFamily::u, 3) ==
          Poly::constant(ctx.domain_table(), Rational(1)));
    // k=2 has an empty u-block; u_1 = u_{k-1} resolves to zero
    const CrossCapContext c2(2);
    CHECK(c2.resolve_dummy(VarFamily::u, 1).is_zero());
    CHECK(c2.resolve_dummy(VarFamily::u, 2) ==
          Poly::constant(c2.domain_table(), Rational(1)));
}

TEST_CASE("build_phi reproduces the normal form") {
    const CrossCapContext c2(2);
    const MapGerm phi2 = build_phi(c2);
    const Poly v1 = dvar(c2, "v1");
    const Poly y = dvar(c2, "y");
    REQUIRE(phi2.components.size() == 3);
    CHECK(phi2.components[0] == v1);
    CHECK(phi2.components[1] == y * y);
    CHECK(phi2.components[2] == v1 * y);

    const CrossCapContext c3(3);
    const MapGerm phi3 = build_phi(c3);
    const Poly u1 = dvar(c3, "u1");
    const Poly w1 = dvar(c3, "v1");
    const Poly w2 = dvar(c3, "v2");
    const Poly z = dvar(c3, "y");
    REQUIRE(phi3.components.size() == 5);
    CHECK(phi3.components[3] == z * z * z + u1 * z);
    CHECK(phi3.components[4] == w1 * z + w2 * (z * z));

    // first 2k-3 components are the domain coordinates themselves, and the
    // last component has no constant term (the sum starts at i=1)
    for (int k = 2; k <= 6; ++k) {
        const CrossCapContext ctx(k);
        const MapGerm phi = build_phi(ctx);
        for (std::size_t i = 0; i + 1 < ctx.domain_dim(); ++i)
            CHECK(phi.components[i] == Poly::variable(ctx.domain_table(), i));
        const Monomial origin(ctx.domain_dim(), 0);
        CHECK(phi.components.back().coeff(origin) == 0);
    }
}

TEST_CASE("jacobian entries") {
    const CrossCapContext c2(2);
    const PolyMatrix j2 = jacobian(c2);
    const Poly v1 = dvar(c2, "v1");
    const Poly y = dvar(c2, "y");
    const Poly one = Poly::constant(c2.domain_table(), Rational(1));
    REQUIRE(j2.rows() == 3);
    REQUIRE(j2.cols() == 2);
    CHECK(j2.at(0, 0) == one);
    CHECK(j2.at(0, 1).is_zero());
    CHECK(j2.at(1, 0).is_zero());
    CHECK(j2.at(1, 1) == Rational(2) * y);
    CHECK(j2.at(2, 0) == y);
    CHECK(j2.at(2, 1) == v1);

    // k=3, row of W_1 o phi: differentiate y^3 + u_1 y by hand
    const CrossCapContext c3(3);
    const PolyMatrix j3 = jacobian(c3);
    const Poly u1 = dvar(c3, "u1");
    const Poly z = dvar(c3, "y");
    CHECK(j3.at(3, 0) == z);
    CHECK(j3.at(3, 1).is_zero());
    CHECK(j3.at(3, 2).is_zero());
    CHECK(j3.at(3, 3) == Rational(3) * (z * z) + u1);

    // definitional check against an independent loop
    for (int k = 2; k <= 5; ++k) {
        const CrossCapContext ctx(k);
        const MapGerm phi = build_phi(ctx);
        const PolyMatrix j = jacobian(ctx);
        CHECK(j.at(0, 0) == Poly::constant(ctx.domain_table(), Rational(1)));
        for (std::size_t i = 0; i < j.rows(); ++i)
            for (std::size_t c = 0; c < j.cols(); ++c)
                CHECK(j.at(i, c) == partial_derivative(phi.components[i], c));
    }
}

TEST_CASE("euler field") {
    const CrossCapContext c3(3);
    const VectorField e3 = euler_field(c3);
    const auto cod = c3.codomain_table();
    const auto cvar = [&](const char* n) { return Poly::variable(cod, *cod->index_of(n)); };
    REQUIRE(e3.components.size() == 5);
    CHECK(e3.components[0] == Rational(2) * cvar("U1"));
    CHECK(e3.components[1] == Rational(2) * cvar("V1"));
    CHECK(e3.components[2] == cvar("V2"));
    CHECK(e3.components[3] == Rational(3) * cvar("W1"));
    CHECK(e3.components[4] == Rational(3) * cvar("W2"));

    const CrossCapContext c2(2);
    const VectorField e2 = euler_field(c2);
    const auto cod2 = c2.codomain_table();
    CHECK(e2.components[0] == Poly::variable(cod2, 0));
    CHECK(e2.components[1] == Rational(2) * Poly::variable(cod2, 1));
    CHECK(e2.components[2] == Rational(2) * Poly::variable(cod2, 2));

    for (int k = 2; k <= 6; ++k) {
        const CrossCapContext ctx(k);
        const Monomial origin(ctx.codomain_dim(), 0);
        for (const Poly& c : euler_field(ctx).components) CHECK(c.coeff(origin) == 0);
    }
}

TEST_CASE("quasihomogeneity check") {
    for (int k = 2; k <= 6; ++k) {
        const CrossCapContext ctx(k);
        CHECK(check_quasihomogeneous(ctx, build_phi(ctx)));
    }

    const CrossCapContext c2(2);
    MapGerm bad = build_phi(c2);
    bad.components[2] += dvar(c2, "y");  // v_1 y + y mixes weighted degrees
    CHECK_FALSE(check_quasihomogeneous(c2, bad));

    MapGerm zeros{2, std::vector<Poly>(3, Poly::zero(c2.domain_table()))};
    CHECK(check_quasihomogeneous(c2, zeros));
}

TEST_CASE("context serializes to the documented JSON") {
    const CrossCapContext c3(3);
    const Json j = context_json(c3);
    CHECK(j.dump() ==
          R"({"k":3,"domain":["u1","v1","v2","y"],"codomain":["U1","V1","V2","W1","W2"],)"
          R"("weights":{"u1":2,"v1":2,"v2":1,"y":1},)"
          R"("degrees":{"U1":2,"V1":2,"V2":1,"W1":3,"W2":3}})");
}
