#pragma once

#include "homcat/homrep.hpp"

namespace homcat {

struct MonoidalDoiDatum {
    DoiDatum datum;
    HomBialgebra a_bialgebra;  // algebra part equals datum.A.algebra
    HomBialgebra c_bialgebra;  // coalgebra part equals datum.C.coalgebra
};

// Left H-module, right H-comodule.
struct YDModule {
    HomHopfAlgebra H;
    std::size_t dim = 0;
    LinearMap action;    // H (x) M -> M
    LinearMap coaction;  // M -> M (x) H
    LinearMap mu, mu_inv;

    YDModule() = default;
    YDModule(HomHopfAlgebra H, LinearMap action, LinearMap coaction, LinearMap mu);

    const Vec& act(Index h, Index m) const { return action.col(static_cast<Index>(h * dim + m)); }
    Vec act(const Vec& h, const Vec& m) const;
    Vec rho(const Vec& m) const { return coaction.apply(m); }
};

// "monoidal_compat" {a, c, d}: a1[0] (x) a2[0] (x) (a1[1].c)(a2[1].d) = Delta(a[0]) (x) a[1].(cd),
// "unit_compat" {a}: eps(a) 1_C = eps(a[0]) a[1].1_C, plus carrier consistency.
CheckReport check_monoidal_datum(const MonoidalDoiDatum& G);

// a.(m (x) n) = a1.m (x) a2.n, rho(m (x) n) = m[0] (x) n[0] (x) m[1]n[1], mu (x) nu.
// Throws DatumNotMonoidal; with verify the output is checked as well.
DoiModule tensor_doi(const MonoidalDoiDatum& G, const DoiModule& M, const DoiModule& N, bool verify = true);
// Same formulas with no checks at all.
DoiModule tensor_doi_unchecked(const MonoidalDoiDatum& G, const DoiModule& M, const DoiModule& N);
DoiModule unit_doi(const MonoidalDoiDatum& G);

// (m (x) n) (x) p -> mu(m) (x) (n (x) pi^-1(p))
LinearMap associator(const DoiModule& M, const DoiModule& N, const DoiModule& P);
// x (x) m -> x mu(m), m (x) x -> x mu(m)
LinearMap left_unitor(const DoiModule& M);
LinearMap right_unitor(const DoiModule& M);
// Associator is a Doi isomorphism on (M, N, P), pentagon on (M, N, P, Q) and triangle on (M, N).
CheckReport check_coherence_on(const MonoidalDoiDatum& G, const DoiModule& M, const DoiModule& N, const DoiModule& P,
                               const DoiModule& Q);

// "yd_compat" {h, m}: h1.m[0] (x) h2 m[1] = mu(n[0]) (x) n[1] h1 with n = h2.mu^-1(m)
CheckReport check_yd(const YDModule& M);
// "yd_compat_alt" {h, m}: rho(h.m) = alpha(h21).m[0] (x) (h22 alpha^-1(m[1])) S^-1(h1)
CheckReport check_yd_alt(const YDModule& M);
bool yd_equivalence(const YDModule& M);

// (H^op (x) H, A = H, C = H^op as bialgebras) with the coaction and action of the
// Yetter-Drinfeld correspondence. Throws ComponentCheckFailed.
MonoidalDoiDatum yd_datum(const HomHopfAlgebra& H);
DoiModule yd_to_doi(const MonoidalDoiDatum& G, const YDModule& M);
YDModule doi_to_yd(const DoiModule& M);

// Doi module of A (x) C over G.datum, convenient alias.
inline DoiModule canonical_doi_module(const MonoidalDoiDatum& G) { return canonical_doi_module(G.datum); }

}  // namespace homcat
