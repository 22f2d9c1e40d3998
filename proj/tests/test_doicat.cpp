#include "yd_fixtures.hpp"

#include <doctest.h>

using namespace homcat;

namespace {

// A = k, C = H with left multiplication
MonoidalDoiDatum k_h_datum(const HomHopfAlgebra& H) {
    MonoidalDoiDatum G;
    G.datum = {H, trivial_comodule_algebra(H), regular_module_coalgebra(H)};
    G.a_bialgebra = ground_hopf().bi;
    G.c_bialgebra = H.bi;
    return G;
}

}  // namespace

TEST_CASE("check_monoidal_datum") {
    for (const auto& H : {fx::qc2(), fx::h4(), fx::h4t()}) CHECK(check_monoidal_datum(k_h_datum(H)).passed());
    for (const char* name : {"qc2", "h4", "h4t", "qc4t", "h4m"}) {
        CAPTURE(name);
        CHECK(check_monoidal_datum(fx::yd(name)).passed());
    }
    const CheckReport r = check_monoidal_datum(fx::regular_datum(fx::qc2()));
    REQUIRE(r.failed("monoidal_compat"));
    CHECK(r.failed("unit_compat"));  // a . 1 = a for left multiplication
    // a = g, c = d = e: g (x) g (x) (g e)(g e) = e versus g . (e e) = g
    CHECK(r.failures.front().witness == std::vector<Index>{1, 0, 0});
}

TEST_CASE("YD datum requires C = H^op as a bialgebra") {
    MonoidalDoiDatum G = fx::yd("h4t");
    G.c_bialgebra = fx::h4t().bi;
    CHECK(check_monoidal_datum(G).failed("monoidal_compat"));
    HomHopfAlgebra sing = fx::qc2();
    sing.S = LinearMap::zero(2, 2);
    sing.S_inv.reset();
    CHECK_THROWS_AS(yd_datum(sing), Error);
}

TEST_CASE("monoidal compatibility of the YD datum against the closed form") {
    CHECK(fx::closed_form_mismatches(fx::yd("h4"), fx::h4()) == 0);
    CHECK(fx::closed_form_mismatches(fx::yd("h4t"), fx::h4t()) == 0);
}

TEST_CASE("tensor_doi and unit_doi") {
    const MonoidalDoiDatum& G = fx::yd("h4t");
    const DoiModule M = canonical_doi_module(G);
    const DoiModule I = unit_doi(G);
    CHECK(check_doi_module(I).passed());
    for (Index a = 0; a < 4; ++a) CHECK(I.act(a, 0) == basis_vec(0, G.a_bialgebra.co.eps(a)));
    const DoiModule MI = tensor_doi(G, M, I), IM = tensor_doi(G, I, M);
    // unitors are Doi isomorphisms onto M
    CHECK(check_doi_morphism(right_unitor(M), MI, M).passed());
    CHECK(check_doi_morphism(left_unitor(M), IM, M).passed());
    const DoiModule II = tensor_doi(G, I, I);
    CHECK(II.action == I.action);
    CHECK(II.coaction == I.coaction);
    const DoiModule MM = tensor_doi(G, M, M);
    CHECK(MM.dim == 256);
    CHECK(check_doi_module(MM).passed());
    const MonoidalDoiDatum trivial = k_h_datum(fx::h4t());
    CHECK(unit_doi(trivial).dim == 1);
}

TEST_CASE("tensor_doi rejects non-monoidal data; converse witness") {
    const MonoidalDoiDatum G = fx::regular_datum(fx::qc2());
    const DoiModule M = canonical_doi_module(G.datum);
    REQUIRE(check_doi_module(M).passed());
    CHECK_THROWS_AS(tensor_doi(G, M, M), Error);
    const DoiModule T = tensor_doi_unchecked(G, M, M);
    const CheckReport r = check_doi_compatibility(T);
    CHECK(r.failed("doi_compat"));
    for (const char* name : {"h4", "h4t"}) {
        const MonoidalDoiDatum R = fx::regular_datum(std::string(name) == "h4" ? fx::h4() : fx::h4t());
        const DoiModule C = canonical_doi_module(R.datum);
        REQUIRE(check_doi_module(C).passed());
        CHECK(check_monoidal_datum(R).failed("monoidal_compat"));
        CHECK(check_doi_compatibility(tensor_doi_unchecked(R, C, C)).failed("doi_compat"));
    }
}

TEST_CASE("associator, pentagon and triangle") {
    const MonoidalDoiDatum& G = fx::yd("h4t");
    const DoiModule I = unit_doi(G);
    CHECK(associator(I, I, I) == LinearMap::identity(1));
    CHECK(check_coherence_on(G, I, I, I, I).passed());
    const DoiModule M = canonical_doi_module(G);
    CHECK(check_coherence_on(G, M, I, M, I).passed());
    const DoiModule& Q = fx::yd("qc2").datum.A.dim() ? canonical_doi_module(fx::yd("qc2")) : M;
    CHECK(check_coherence_on(fx::yd("qc2"), Q, Q, Q, Q).passed());
}

TEST_CASE("Yetter-Drinfeld modules: both compatibility forms agree") {
    std::size_t pos = 0, neg = 0;
    for (const auto& c : fx::yd_cases()) {
        CAPTURE(c.name);
        CHECK(check_hom_module(HomModule(c.M.H.alg(), c.M.action, c.M.mu)).passed());
        CHECK(check_hom_comodule(HomComodule(c.M.H.co(), c.M.coaction, c.M.mu)).passed());
        const bool yd = check_yd(c.M).passed(), alt = check_yd_alt(c.M).passed();
        CHECK(yd == c.positive);
        CHECK(alt == c.positive);
        CHECK(yd_equivalence(c.M));
        (c.positive ? pos : neg) += 1;
    }
    CHECK(pos >= 4);
    CHECK(neg >= 3);
}

TEST_CASE("yd_to_doi and doi_to_yd") {
    for (const auto& c : fx::yd_cases()) {
        if (c.M.dim == 1 || c.M.H.dim() != 4) continue;
        CAPTURE(c.name);
        const std::string base = c.name.find("h4t") != std::string::npos ? "h4t" : "h4";
        const MonoidalDoiDatum& G = fx::yd(base == "h4" && c.name.find("qc4t") != std::string::npos ? "qc4t" : base);
        const DoiModule D = yd_to_doi(G, c.M);
        CHECK(check_doi_module(D).passed() == check_yd(c.M).passed());
        const YDModule back = doi_to_yd(D);
        CHECK(back.action == c.M.action);
        CHECK(back.coaction == c.M.coaction);
        CHECK(back.mu == c.M.mu);
    }
    CHECK_THROWS_AS(yd_to_doi(fx::yd("h4"), fx::trivial_yd(fx::h4t())), Error);
}
