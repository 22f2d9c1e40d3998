#pragma once

#include "homcat/linalg.hpp"
#include "homcat/report.hpp"

#include <optional>
#include <tuple>

namespace homcat {

// (A, m, 1, alpha). mul: dim^2 -> dim with e_i (x) e_j at i * dim + j.
struct HomAlgebra {
    std::size_t dim = 0;
    LinearMap mul;
    Vec unit;
    LinearMap alpha, alpha_inv;

    HomAlgebra() = default;
    HomAlgebra(LinearMap mul, Vec unit, LinearMap alpha);

    const Vec& m(Index i, Index j) const { return mul.col(static_cast<Index>(i * dim + j)); }
    Vec m(const Vec& a, const Vec& b) const;
    Vec al(const Vec& v, int k = 1) const;
};

// (C, Delta, eps, gamma). comul: dim -> dim^2.
struct HomCoalgebra {
    std::size_t dim = 0;
    LinearMap comul;
    LinearMap counit;  // dim -> 1
    LinearMap gamma, gamma_inv;

    HomCoalgebra() = default;
    HomCoalgebra(LinearMap comul, LinearMap counit, LinearMap gamma);

    const Vec& delta(Index i) const { return comul.col(i); }
    Vec delta(const Vec& v) const { return comul.apply(v); }
    Scalar eps(Index i) const;
    Scalar eps(const Vec& v) const;
    Vec al(const Vec& v, int k = 1) const;
};

struct HomBialgebra {
    HomAlgebra alg;
    HomCoalgebra co;
    std::size_t dim() const { return alg.dim; }
};

struct HomHopfAlgebra {
    HomBialgebra bi;
    LinearMap S;
    std::optional<LinearMap> S_inv;
    std::optional<LinearMap> S_bar;  // twisted antipode, experimental

    std::size_t dim() const { return bi.dim(); }
    const HomAlgebra& alg() const { return bi.alg; }
    const HomCoalgebra& co() const { return bi.co; }
    const LinearMap& alpha() const { return bi.alg.alpha; }
    // S^{-1}; computed from S when not stored. Throws MissingInverseAntipode.
    LinearMap antipode_inverse() const;
};

CheckReport check_hom_algebra(const HomAlgebra& A);
CheckReport check_hom_coalgebra(const HomCoalgebra& C);
CheckReport check_hom_bialgebra(const HomBialgebra& B);
CheckReport check_antipode(const HomHopfAlgebra& H);
CheckReport check_hom_hopf(const HomHopfAlgebra& H);  // bialgebra + antipode

// Structure maps of a classical Hopf algebra deformed by a bialgebra
// automorphism: mul' = aut o m, comul' = (aut^-1 (x) aut^-1) o Delta.
HomHopfAlgebra twist_classical(const HomHopfAlgebra& classical, const LinearMap& aut);
HomHopfAlgebra opposite(const HomHopfAlgebra& H);
HomHopfAlgebra tensor_hopf(const HomHopfAlgebra& H1, const HomHopfAlgebra& H2);
HomHopfAlgebra dual_hopf(const HomHopfAlgebra& H);

// g with m o (g (x) f) o Delta = eta o eps = m o (f (x) g) o Delta.
LinearMap convolution_invert(const LinearMap& f, const HomAlgebra& A, const HomCoalgebra& C);

// Swap on V (x) W: e_i (x) e_j -> e_j (x) e_i.
LinearMap flip(std::size_t n1, std::size_t n2);

// Hopf algebra of the cyclic group of order n, basis g^0..g^{n-1}, alpha = id.
HomHopfAlgebra cyclic_group_algebra(std::size_t n);
// Sweedler's 4-dim algebra, basis 1, g, x, gx; alpha = id.
HomHopfAlgebra sweedler();
// The one-dimensional Hopf algebra k.
HomHopfAlgebra ground_hopf();

}  // namespace homcat
