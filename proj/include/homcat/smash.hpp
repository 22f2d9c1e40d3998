#pragma once

#include "homcat/braiding.hpp"

namespace homcat {

// B with a right H-action B (x) H -> B, index b * dimH + h; zeta = algebra.alpha.
struct RightModuleAlgebra {
    HomBialgebra H;
    HomAlgebra algebra;
    LinearMap action;

    std::size_t dim() const { return algebra.dim; }
    const Vec& act(Index b, Index h) const { return action.col(static_cast<Index>(b * H.dim() + h)); }
    Vec act(const Vec& b, const Vec& h) const;
};

// unit, zeta, hom_assoc, mult, unit_action
CheckReport check_right_module_algebra(const RightModuleAlgebra& B);

// C* with the convolution product, zeta = (gamma^-1)^T and (f <- h)(c) = f(h . gamma^-2(c)).
// Throws StructureCheckFailed.
RightModuleAlgebra dual_module_algebra(const ModuleCoalgebra& C);
// b <- h = eps(h) zeta(b)
RightModuleAlgebra trivial_right_module_algebra(const HomBialgebra& H, const HomAlgebra& B);

// Carrier A (x) B, index a * dimB + b.
struct SmashProduct {
    ComoduleAlgebra A;
    RightModuleAlgebra B;
    HomAlgebra product;
    std::size_t dim() const { return product.dim; }
};

// (a#b)(c#d) = a beta(c[0]) # (zeta^-1(b) <- c[1]) d, unit 1#1, structure map beta (x) zeta.
// Throws StructureCheckFailed.
SmashProduct smash_product(const ComoduleAlgebra& A, const RightModuleAlgebra& B);
// A # C* for a Doi datum.
SmashProduct doi_smash(const DoiDatum& D);

// "delta_compat" {a, b}: Delta(beta(a[0])) (x) Delta(zeta^-1(b) <- a[1]) against
//   beta(a1[0]) (x) beta(a2[0]) (x) (zeta^-1(b1) <- a1[1]) (x) (zeta^-1(b2) <- a2[1]).
// "eps_compat" {a, b}: eps(a[0]) eps(b <- a[1]) = eps(a) eps(b).
// A_bi and B_bi carry the coalgebra structures of the two factors.
CheckReport check_smash_conditions(const SmashProduct& P, const HomBialgebra& A_bi, const HomBialgebra& B_bi);
// C* with the transposed structure maps, structure map (gamma^-1)^T; unchecked.
HomBialgebra dual_bialgebra(const HomBialgebra& C);
// Delta(a#b) = (a1#b1) (x) (a2#b2). Throws ConditionFailed.
HomBialgebra smash_bialgebra(const SmashProduct& P, const HomBialgebra& A_bi, const HomBialgebra& B_bi);
// S(a#b) = S(beta a)[0] # (S(zeta^-1 b) <- alpha^-1(S(beta a)[1])), checked. Throws
// ConditionFailed or AntipodeCheckFailed.
HomHopfAlgebra smash_hopf(const SmashProduct& P, const HomHopfAlgebra& A, const HomHopfAlgebra& B);

// (a#f).m = <f, m[1]> beta^2(a).mu(m[0]) over doi_smash(M.datum).
HomModule doi_to_smash(const DoiModule& M);
// a.m = (beta^-2(a)#eps).m and rho(m) = sum_i mu^-2((1#e^i).m) (x) e_i. Throws ReconstructionFailed.
DoiModule smash_to_doi(const DoiDatum& D, const HomModule& N);

// D(H) = H # (H^op)* from yd_datum(H), its Hopf structure, and the candidate
// R = flip of sum_{i,j} beta^-1(Q1(e_i (x) e_j))#e^i (x) beta^-1(Q2(e_i (x) e_j))#e^j for the
// braiding map Q(h (x) k) = eps(k) 1 (x) h, together with its quasitriangularity report.
struct DrinfeldDouble {
    SmashProduct smash;
    HomHopfAlgebra hopf;
    Vec R_candidate;
    CheckReport qt_report;
};
DrinfeldDouble drinfeld_double(const HomHopfAlgebra& H);

// sum_{i,j} beta^-1(Q1(e_i (x) e_j))#e^i (x) beta^-1(Q2(e_i (x) e_j))#e^j in (A#C*)^(x)2
Vec smash_element_from(const MonoidalDoiDatum& G, const LinearMap& Q);

}  // namespace homcat
