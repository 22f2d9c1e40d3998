#pragma once

#include "homcat/doicat.hpp"

namespace homcat {

struct DatumMorphism {
    DoiDatum source, target;
    LinearMap phi_H, psi_A, phi_C;

    DatumMorphism() = default;
    // Throws InvalidMorphism unless check_datum_morphism passes.
    DatumMorphism(DoiDatum source, DoiDatum target, LinearMap phi_H, LinearMap psi_A, LinearMap phi_C);
};

// Structure-map compatibilities plus "action_compat" phi_C(h.c) = phi_H(h).phi_C(c)
// and "coaction_compat" rho'(psi(a)) = psi(a[0]) (x) phi_H(a[1]).
CheckReport check_datum_morphism(const DoiDatum& source, const DoiDatum& target, const LinearMap& phi_H,
                                 const LinearMap& psi_A, const LinearMap& phi_C);
DatumMorphism identity_morphism(const DoiDatum& D);

// F(M) = A' (x)_A M as a quotient of A' (x) M.
struct InducedModule {
    DoiModule module;
    DoiModule base;
    Subspace relations;    // balancing relations in A' (x) M
    LinearMap projection;  // A' (x) M -> F(M)
    LinearMap section;     // F(M) -> A' (x) M
};

// G(M') = M' box_C' C as a subspace of M' (x) C.
struct CotensorModule {
    DoiModule module;
    DoiModule base;
    Subspace carrier;
    LinearMap inclusion;  // G(M') -> M' (x) C
    Vec coords(const Vec& v) const { return carrier.coords(v); }
};

// Throws DatumMismatch, WellDefinednessFailure, StructureCheckFailed.
InducedModule induce(const DatumMorphism& xi, const DoiModule& M);
// Throws DatumMismatch, RestrictionFailure, StructureCheckFailed.
CotensorModule cotensor(const DatumMorphism& xi, const DoiModule& Mp);

LinearMap induce_map(const LinearMap& f, const InducedModule& FM, const InducedModule& FN);
LinearMap cotensor_map(const LinearMap& g, const CotensorModule& GM, const CotensorModule& GN);

// eta_M: M -> GF(M), m -> [1 (x) mu^-1(m[0])] (x) m[1]
LinearMap adjunction_unit(const DatumMorphism& xi, const DoiModule& M, const InducedModule& FM, const CotensorModule& GFM);
// delta_M': FG(M') -> M', [a' (x) (m' (x) c)] -> eps(c) a'.mu'(m')
LinearMap adjunction_counit(const DatumMorphism& xi, const CotensorModule& GMp, const InducedModule& FGMp);
// Both triangle identities plus the Doi-morphism checks of eta and delta.
CheckReport check_triangles(const DatumMorphism& xi, const DoiModule& M, const DoiModule& Mp);

// A as a Doi module: a.b = beta^-1(a)b, rho(b) = b[0] (x) b[1].1_C, mu = beta.
DoiModule regular_doi(const DoiDatum& D, const Vec& c_unit);
inline DoiModule regular_doi(const MonoidalDoiDatum& G) { return regular_doi(G.datum, G.c_bialgebra.alg.unit); }
// F(A) -> A', [a' (x) b] -> beta'^-1(a') psi(b)
LinearMap induced_regular_iso(const DatumMorphism& xi, const InducedModule& FA);

// For xi with psi_A = id: M over the target datum with coaction (id (x) phi_C) rho.
DoiModule pushforward(const DatumMorphism& xi, const DoiModule& M);
// For xi with phi_C = id: N over the source datum with action psi(a).n.
DoiModule restrict_scalars(const DatumMorphism& xi, const DoiModule& N);
// G(N) -> restrict_scalars(N), n (x) c -> eps(c) nu(n)
LinearMap restriction_iso(const DatumMorphism& xi, const CotensorModule& GN);

struct TensorIdentity {
    DoiModule lhs, rhs;
    LinearMap Gamma;  // lhs -> rhs
    LinearMap Psi;    // rhs -> lhs
};

// For xi = (id, id, phi_C): M (x) G(N) -> G(F(M) (x) N). Throws HypothesisViolated.
TensorIdentity tensor_identity_left(const MonoidalDoiDatum& Gs, const MonoidalDoiDatum& Gt, const DatumMorphism& xi,
                                    const DoiModule& M, const DoiModule& N);
// Mirror: G(N) (x) M -> G(N (x) F(M)).
TensorIdentity tensor_identity_right(const MonoidalDoiDatum& Gs, const MonoidalDoiDatum& Gt, const DatumMorphism& xi,
                                     const DoiModule& M, const DoiModule& N);
// For xi = (id, psi_A, id): F(M (x) G(N)) -> F(M) (x) N, with G(N) taken as restrict_scalars(N).
TensorIdentity tensor_identity_dual(const MonoidalDoiDatum& Gs, const MonoidalDoiDatum& Gt, const DatumMorphism& xi,
                                    const DoiModule& M, const DoiModule& N);
// M (x) C -> Lambda(M) box C, m (x) c -> mu(m[0]) (x) m[1]c. Throws DatumNotMonoidal.
struct ForgetIso {
    DoiModule lhs, rhs;
    LinearMap iso;
};
ForgetIso forget_tensor_iso(const MonoidalDoiDatum& G, const DoiModule& M);

// Datum (H, A, k) with the trivial H-action on k, and the morphism (id, id, eps_C) onto it.
DoiDatum counit_datum(const DoiDatum& D);
DatumMorphism counit_morphism(const DoiDatum& D);

}  // namespace homcat
