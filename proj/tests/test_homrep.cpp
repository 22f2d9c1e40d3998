#include "yd_fixtures.hpp"

#include <doctest.h>

using namespace homcat;

TEST_CASE("check_hom_module") {
    for (const auto& H : {fx::qc2(), fx::h4(), fx::h4t(), fx::qc4t()}) {
        CHECK(check_hom_module(regular_module(H.alg())).passed());
        CHECK(check_hom_module(regular_module(H.alg(), Side::Right)).passed());
        CHECK(check_hom_module(trivial_module(H.bi, LinearMap::identity(3))).passed());
        CHECK(check_hom_module(trivial_module(H.bi, LinearMap::identity(2), Side::Right)).passed());
    }
    // regular H4 module with mu = diag(1,1,2,2), which does not commute with left multiplication by x
    const HomHopfAlgebra H = fx::h4();
    const HomModule bad(H.alg(), H.alg().mul, LinearMap::diagonal({1, 1, 2, 2}));
    const CheckReport r = check_hom_module(bad);
    CHECK(r.failed("mu_action"));
    bool seen = false;
    for (const auto& f : r.failures)
        if (f.axiom == "mu_action" && f.witness == std::vector<Index>{2, 0}) seen = true;
    CHECK(seen);  // mu(x . 1) = 2x but x . mu(1) = x
}

TEST_CASE("check_hom_comodule") {
    for (const auto& H : {fx::qc2(), fx::h4(), fx::h4t(), fx::qc4t()}) {
        CHECK(check_hom_comodule(regular_comodule(H.co())).passed());
        CHECK(check_hom_comodule(regular_comodule(H.co(), Side::Left)).passed());
        CHECK(check_hom_comodule(trivial_comodule(H.bi, LinearMap::identity(2))).passed());
        CHECK(check_hom_comodule(trivial_comodule(H.bi, LinearMap::identity(2), Side::Left)).passed());
    }
    const HomHopfAlgebra H = fx::h4t();
    HomComodule bad = regular_comodule(H.co());
    bad.coaction = bad.coaction.scale(2);
    const CheckReport r = check_hom_comodule(bad);
    REQUIRE(r.failed("counit"));
    for (const auto& f : r.failures)
        if (f.axiom == "counit") {
            CHECK(f.witness == std::vector<Index>{0});
            break;
        }
}

TEST_CASE("comodule algebras and module coalgebras") {
    for (const auto& H : {fx::qc2(), fx::h4(), fx::h4t()}) {
        CHECK(check_comodule_algebra(regular_comodule_algebra(H)).passed());
        CHECK(check_comodule_algebra(trivial_comodule_algebra(H)).passed());
        CHECK(check_module_coalgebra(regular_module_coalgebra(H)).passed());
        CHECK(check_module_coalgebra(trivial_module_coalgebra(H)).passed());
    }
    for (const char* name : {"qc2", "h4", "h4t", "qc4t"}) {
        const DoiDatum& D = fx::yd(name).datum;
        CHECK(check_comodule_algebra(D.A).passed());
        CHECK(check_module_coalgebra(D.C).passed());
    }
    // the YD coaction is not multiplicative once the legs of H^op (x) H are swapped
    DoiDatum D = fx::yd("h4t").datum;
    D.A.comodule.coaction = LinearMap::identity(4).kron(flip(4, 4)) * D.A.comodule.coaction;
    CHECK(!check_comodule_algebra(D.A).passed());
}

TEST_CASE("YD coaction matches the displayed formula on H4") {
    const HomHopfAlgebra H = fx::h4t();
    const DoiDatum& D = fx::yd("h4t").datum;
    const LinearMap Si = H.antipode_inverse();
    // independent evaluation through Sweedler sums
    for (Index h = 0; h < 4; ++h) {
        Vec want;
        for (const auto& [k, x] : H.co().delta(h))
            for (const auto& [l, y] : H.co().delta(k % 4)) {
                const Vec left = H.alg().al(basis_vec(l / 4));
                const Vec mid = Si.apply(H.alg().al(basis_vec(k / 4), -1));
                want = add(want, outer(left, outer(mid, basis_vec(l % 4), 4), 16), x * y);
            }
        CHECK(D.A.rho(h) == want);
    }
}

TEST_CASE("check_doi_module") {
    for (const char* name : {"qc2", "h4", "h4t", "qc4t"}) {
        CAPTURE(name);
        CHECK(check_doi_module(canonical_doi_module(fx::yd(name).datum)).passed());
    }
    // M = A, C = k
    for (const auto& H : {fx::h4(), fx::h4t()}) {
        DoiDatum D{H, regular_comodule_algebra(H), trivial_module_coalgebra(H)};
        CHECK(check_comodule_algebra(D.A).passed());
        const LinearMap& a = H.alpha();
        LinearMap co(4, 4);
        for (Index m = 0; m < 4; ++m) co.set_col(m, a.inverse().col(m));
        const DoiModule M(D, H.alg().mul, co, a);
        CHECK(check_doi_module(M).passed());
    }
    // canonical module with the A and C legs of the coaction swapped
    const DoiModule C = canonical_doi_module(fx::yd("h4t").datum);
    DoiModule bad = C;
    bad.coaction = flip(4, 4).kron(LinearMap::identity(4)) * C.coaction;
    const CheckReport r = check_doi_compatibility(bad);
    REQUIRE(r.failed("doi_compat"));
    CHECK(r.failures.front().witness.size() == 2);
}

TEST_CASE("check_doi_morphism") {
    const DoiModule M = canonical_doi_module(fx::yd("h4t").datum);
    CHECK(check_doi_morphism(LinearMap::identity(M.dim), M, M).passed());
    CHECK(check_doi_morphism(LinearMap::zero(M.dim, M.dim), M, M).passed());
    // mu commutes with the structure maps only up to alpha and gamma
    const CheckReport rm = check_doi_morphism(M.mu, M, M);
    CHECK(rm.failed("A_linear"));
    CHECK(rm.failed("C_colinear"));
    CHECK(!rm.failed("mu_natural"));
    const DoiModule U = canonical_doi_module(fx::yd("h4").datum);
    CHECK(check_doi_morphism(U.mu, U, U).passed());
    std::vector<Scalar> d(16, 0);
    d[0] = 1;
    CHECK(check_doi_morphism(LinearMap::diagonal(d), M, M).failed("A_linear"));
    const DoiModule N = canonical_doi_module(fx::yd("h4").datum);
    CHECK_THROWS_AS(check_doi_morphism(LinearMap::identity(16), M, N), Error);
    try {
        check_doi_morphism(LinearMap::identity(16), M, N);
    } catch (const Error& e) {
        CHECK(e.code() == "DatumMismatch");
    }
}

TEST_CASE("property: passing Doi modules are mu-natural") {
    for (const char* name : {"h4", "h4t", "qc4t"}) {
        const DoiModule M = canonical_doi_module(fx::yd(name).datum);
        REQUIRE(check_doi_module(M).passed());
        for (Index m = 0; m < M.dim; ++m)
            CHECK(M.rho(M.mu.col(m)) == M.mu.kron(M.datum.C.coalgebra.gamma).apply(M.rho(m)));
    }
}
