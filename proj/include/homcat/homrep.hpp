#pragma once

#include "homcat/homalg.hpp"

#include <cstdint>

namespace homcat {

enum class Side { Left, Right };

// Left: action A (x) M -> M, index a * dim + m.  Right: M (x) A -> M, index m * dimA + a.
struct HomModule {
    HomAlgebra algebra;
    std::size_t dim = 0;
    LinearMap action;
    LinearMap mu, mu_inv;
    Side side = Side::Left;

    HomModule() = default;
    HomModule(HomAlgebra algebra, LinearMap action, LinearMap mu, Side side = Side::Left);

    // a acting on m, whichever side
    const Vec& act(Index a, Index m) const;
    Vec act(const Vec& a, const Vec& m) const;
};

// Right: M -> M (x) C, index m * dimC + c.  Left: M -> C (x) M, index c * dim + m.
struct HomComodule {
    HomCoalgebra coalgebra;
    std::size_t dim = 0;
    LinearMap coaction;
    LinearMap mu, mu_inv;
    Side side = Side::Right;

    HomComodule() = default;
    HomComodule(HomCoalgebra coalgebra, LinearMap coaction, LinearMap mu, Side side = Side::Right);

    const Vec& co(Index m) const { return coaction.col(m); }
    Vec co(const Vec& m) const { return coaction.apply(m); }
};

// A with an H-coaction; beta = mu of the comodule.
struct ComoduleAlgebra {
    HomBialgebra H;
    HomAlgebra algebra;
    HomComodule comodule;
    std::size_t dim() const { return algebra.dim; }
    const Vec& rho(Index a) const { return comodule.co(a); }
};

// C with an H-action; gamma = mu of the module.
struct ModuleCoalgebra {
    HomBialgebra H;
    HomCoalgebra coalgebra;
    HomModule module;
    std::size_t dim() const { return coalgebra.dim; }
    const Vec& act(Index h, Index c) const { return module.act(h, c); }
};

struct DoiDatum {
    HomHopfAlgebra H;
    ComoduleAlgebra A;
    ModuleCoalgebra C;
    // content hash over every structure map
    std::uint64_t fingerprint() const;
};

// Left A-module, right C-comodule on one carrier.
struct DoiModule {
    DoiDatum datum;
    std::size_t dim = 0;
    LinearMap action;    // A (x) M -> M
    LinearMap coaction;  // M -> M (x) C
    LinearMap mu, mu_inv;

    DoiModule() = default;
    DoiModule(DoiDatum datum, LinearMap action, LinearMap coaction, LinearMap mu);

    HomModule as_module() const { return {datum.A.algebra, action, mu}; }
    HomComodule as_comodule() const { return {datum.C.coalgebra, coaction, mu}; }
    const Vec& act(Index a, Index m) const { return action.col(static_cast<Index>(a * dim + m)); }
    Vec act(const Vec& a, const Vec& m) const;
    const Vec& rho(Index m) const { return coaction.col(m); }
    Vec rho(const Vec& m) const { return coaction.apply(m); }
};

CheckReport check_hom_module(const HomModule& M);
CheckReport check_hom_comodule(const HomComodule& M);
CheckReport check_comodule_algebra(const ComoduleAlgebra& A);
CheckReport check_module_coalgebra(const ModuleCoalgebra& C);
// Doi compatibility rho(a.m) = a[0].m[0] (x) a[1].m[1] only
CheckReport check_doi_compatibility(const DoiModule& M);
CheckReport check_doi_module(const DoiModule& M);
// Throws DatumMismatch when M and N live over different data.
CheckReport check_doi_morphism(const LinearMap& f, const DoiModule& M, const DoiModule& N);

HomModule regular_module(const HomAlgebra& A, Side side = Side::Left);
// m . a = eps(a) mu(m)
HomModule trivial_module(const HomBialgebra& B, const LinearMap& mu, Side side = Side::Left);
HomComodule regular_comodule(const HomCoalgebra& C, Side side = Side::Right);
// m -> mu^-1(m) (x) 1_C
HomComodule trivial_comodule(const HomBialgebra& B, const LinearMap& mu, Side side = Side::Right);

// H as a comodule algebra over itself via Delta, and as a module coalgebra via mul.
ComoduleAlgebra regular_comodule_algebra(const HomHopfAlgebra& H);
ModuleCoalgebra regular_module_coalgebra(const HomHopfAlgebra& H);
// k with 1 -> 1 (x) 1_H, resp. h . 1 = eps(h) 1
ComoduleAlgebra trivial_comodule_algebra(const HomHopfAlgebra& H);
ModuleCoalgebra trivial_module_coalgebra(const HomHopfAlgebra& H);

// A (x) C with a.(b (x) c) = beta^-1(a)b (x) gamma(c), rho(b (x) c) = (b[0] (x) c1) (x) b[1].c2.
DoiModule canonical_doi_module(const DoiDatum& D);

}  // namespace homcat
