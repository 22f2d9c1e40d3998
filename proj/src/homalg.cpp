#include "homcat/homalg.hpp"

namespace homcat {

namespace {

std::size_t isqrt_exact(std::size_t n2, const char* what) {
    std::size_t n = 0;
    while (n * n < n2) ++n;
    if (n * n != n2) throw Error("DimensionMismatch", what);
    return n;
}

Vec apply_pow(const LinearMap& f, const LinearMap& finv, Vec v, int k) {
    const LinearMap& g = k >= 0 ? f : finv;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) v = g.apply(v);
    return v;
}

}  // namespace

HomAlgebra::HomAlgebra(LinearMap mul_, Vec unit_, LinearMap alpha_)
    : dim(mul_.cod()), mul(std::move(mul_)), unit(std::move(unit_)), alpha(std::move(alpha_)) {
    if (isqrt_exact(mul.dom(), "mul domain is not dim^2") != dim) throw Error("DimensionMismatch", "mul");
    if (alpha.dom() != dim || alpha.cod() != dim) throw Error("DimensionMismatch", "alpha");
    alpha_inv = alpha.inverse();
}

Vec HomAlgebra::m(const Vec& a, const Vec& b) const {
    if (a.size() == 1 && b.size() == 1) return scaled(m(a[0].first, b[0].first), a[0].second * b[0].second);
    Acc acc(dim);
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) acc.add(m(i, j), x * y);
    return acc.take();
}

Vec HomAlgebra::al(const Vec& v, int k) const { return apply_pow(alpha, alpha_inv, v, k); }

HomCoalgebra::HomCoalgebra(LinearMap comul_, LinearMap counit_, LinearMap gamma_)
    : dim(comul_.dom()), comul(std::move(comul_)), counit(std::move(counit_)), gamma(std::move(gamma_)) {
    if (comul.cod() != dim * dim) throw Error("DimensionMismatch", "comul codomain is not dim^2");
    if (counit.dom() != dim || counit.cod() != 1) throw Error("DimensionMismatch", "counit");
    if (gamma.dom() != dim || gamma.cod() != dim) throw Error("DimensionMismatch", "gamma");
    gamma_inv = gamma.inverse();
}

Scalar HomCoalgebra::eps(Index i) const { return coeff(counit.col(i), 0); }

Scalar HomCoalgebra::eps(const Vec& v) const {
    Scalar s(0);
    for (const auto& [i, x] : v) s += x * eps(i);
    return s;
}

Vec HomCoalgebra::al(const Vec& v, int k) const { return apply_pow(gamma, gamma_inv, v, k); }

LinearMap HomHopfAlgebra::antipode_inverse() const {
    if (S_inv) return *S_inv;
    try {
        return S.inverse();
    } catch (const Error&) {
        throw Error("MissingInverseAntipode", "antipode is not bijective");
    }
}

LinearMap flip(std::size_t n1, std::size_t n2) {
    LinearMap t(n1 * n2, n1 * n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) t.set_col(static_cast<Index>(i * n2 + j), basis_vec(static_cast<Index>(j * n1 + i)));
    return t;
}

CheckReport check_hom_algebra(const HomAlgebra& A) {
    const std::size_t n = A.dim;
    CheckReport r = check_each(n, [&](Index a, CheckReport& rep) {
        const Vec ea = basis_vec(a), aa = A.al(ea);
        rep.expect("unit_right", {a}, A.m(ea, A.unit), aa);
        rep.expect("unit_left", {a}, A.m(A.unit, ea), aa);
        for (Index b = 0; b < n; ++b) {
            const Vec eb = basis_vec(b), ab = A.m(a, b);
            rep.expect("alpha_mult", {a, b}, A.al(ab), A.m(aa, A.al(eb)));
            for (Index c = 0; c < n; ++c) {
                const Vec ec = basis_vec(c);
                rep.expect("hom_assoc", {a, b, c}, A.m(aa, A.m(eb, ec)), A.m(ab, A.al(ec)));
            }
        }
    });
    CheckReport head;
    std::vector<Index> supp;
    for (const auto& e : A.unit) supp.push_back(e.first);
    head.expect("alpha_unit", supp, A.al(A.unit), A.unit);
    head.merge(r);
    return head;
}

CheckReport check_hom_coalgebra(const HomCoalgebra& C) {
    const std::size_t n = C.dim;
    return check_each(n, [&](Index c, CheckReport& rep) {
        const Vec ec = basis_vec(c);
        const Vec d = C.delta(c);
        // gamma^-1(c1) (x) Delta(c2) = Delta(c1) (x) gamma^-1(c2)
        Acc l(n * n * n), rr(n * n * n);
        for (const auto& [k, x] : d) {
            const Index c1 = k / n, c2 = k % n;
            l.add_outer(C.al(basis_vec(c1), -1), C.delta(c2), n * n, x);
            rr.add_outer(C.delta(c1), C.al(basis_vec(c2), -1), n, x);
        }
        rep.expect("hom_coassoc", {c}, l.take(), rr.take());
        Acc e1(n), e2(n);
        for (const auto& [k, x] : d) {
            e1.add(k % n, x * C.eps(k / n));
            e2.add(k / n, x * C.eps(k % n));
        }
        const Vec gi = C.al(ec, -1);
        rep.expect("counit_left", {c}, e1.take(), gi);
        rep.expect("counit_right", {c}, e2.take(), gi);
        rep.expect("gamma_comul", {c}, C.delta(C.al(ec)), C.gamma.kron(C.gamma).apply(d));
        if (C.eps(C.al(ec)) != C.eps(c)) rep.fail("gamma_counit", {c}, basis_vec(0, C.eps(C.al(ec))), basis_vec(0, C.eps(c)));
    });
}

CheckReport check_hom_bialgebra(const HomBialgebra& B) {
    const HomAlgebra& A = B.alg;
    const HomCoalgebra& C = B.co;
    if (A.dim != C.dim) throw Error("DimensionMismatch", "algebra and coalgebra dims differ");
    const std::size_t n = A.dim;
    CheckReport r;
    if (A.alpha != C.gamma) r.fail("structure_map", {});
    r.merge(check_hom_algebra(A));
    r.merge(check_hom_coalgebra(C));
    r.expect("comul_unit", {}, C.delta(A.unit), outer(A.unit, A.unit, n));
    if (C.eps(A.unit) != Scalar(1)) r.fail("counit_unit", {});
    const LinearMap mm = A.mul.kron(A.mul) * LinearMap::identity(n).kron(flip(n, n)).kron(LinearMap::identity(n));
    r.merge(check_each(n, [&](Index a, CheckReport& rep) {
        for (Index b = 0; b < n; ++b) {
            const Vec& ab = A.m(a, b);
            // Delta(a)Delta(b) via (m (x) m)(1 (x) flip (x) 1)
            const Vec rhs = mm.apply(outer(C.delta(a), C.delta(b), n * n));
            rep.expect("comul_mult", {a, b}, C.delta(ab), rhs);
            const Scalar l = C.eps(ab), rr = C.eps(a) * C.eps(b);
            if (l != rr) rep.fail("counit_mult", {a, b}, basis_vec(0, l), basis_vec(0, rr));
        }
    }));
    return r;
}

CheckReport check_antipode(const HomHopfAlgebra& H) {
    const HomAlgebra& A = H.alg();
    const HomCoalgebra& C = H.co();
    const std::size_t n = H.dim();
    return check_each(n, [&](Index c, CheckReport& rep) {
        Acc l(n), rr(n);
        for (const auto& [k, x] : C.delta(c)) {
            const Index c1 = k / n, c2 = k % n;
            l.add(A.m(H.S.col(c1), basis_vec(c2)), x);
            rr.add(A.m(basis_vec(c1), H.S.col(c2)), x);
        }
        const Vec target = scaled(A.unit, C.eps(c));
        rep.expect("antipode_left", {c}, l.take(), target);
        rep.expect("antipode_right", {c}, rr.take(), target);
        rep.expect("antipode_alpha", {c}, H.S.apply(A.alpha.col(c)), A.alpha.apply(H.S.col(c)));
    });
}

CheckReport check_hom_hopf(const HomHopfAlgebra& H) {
    CheckReport r = check_hom_bialgebra(H.bi);
    r.merge(check_antipode(H));
    if (H.S_inv && (*H.S_inv * H.S != LinearMap::identity(H.dim()) || H.S * *H.S_inv != LinearMap::identity(H.dim())))
        r.fail("antipode_inverse", {});
    return r;
}

HomHopfAlgebra twist_classical(const HomHopfAlgebra& H, const LinearMap& aut) {
    const std::size_t n = H.dim();
    if (aut.dom() != n || aut.cod() != n) throw Error("DimensionMismatch", "automorphism");
    const HomAlgebra& A = H.alg();
    const HomCoalgebra& C = H.co();
    if (!A.alpha.is_identity() || !C.gamma.is_identity())
        throw Error("NotAutomorphism", "input is not classical (structure map is not the identity)");
    LinearMap inv;
    try {
        inv = aut.inverse();
    } catch (const Error&) {
        throw Error("NotAutomorphism", "map is not invertible");
    }
    const LinearMap aa = aut.kron(aut);
    if (aut * A.mul != A.mul * aa) throw Error("NotAutomorphism", "does not preserve multiplication");
    if (aut.apply(A.unit) != A.unit) throw Error("NotAutomorphism", "does not fix the unit");
    if (C.comul * aut != aa * C.comul) throw Error("NotAutomorphism", "does not preserve comultiplication");
    if (C.counit * aut != C.counit) throw Error("NotAutomorphism", "does not preserve the counit");
    HomHopfAlgebra T;
    T.bi.alg = HomAlgebra(aut * A.mul, A.unit, aut);
    T.bi.co = HomCoalgebra(inv.kron(inv) * C.comul, C.counit, aut);
    T.S = H.S;
    T.S_inv = H.S_inv;
    if (!check_hom_hopf(T).passed()) throw Error("TwistFailed", "twisted structure fails the Hom-Hopf axioms");
    return T;
}

HomHopfAlgebra opposite(const HomHopfAlgebra& H) {
    const std::size_t n = H.dim();
    HomHopfAlgebra O;
    O.bi.alg = HomAlgebra(H.alg().mul * flip(n, n), H.alg().unit, H.alg().alpha);
    O.bi.co = H.co();
    O.S = H.antipode_inverse();
    O.S_inv = H.S;
    if (!check_hom_hopf(O).passed()) throw Error("StructureCheckFailed", "opposite fails the Hom-Hopf axioms");
    return O;
}

HomHopfAlgebra tensor_hopf(const HomHopfAlgebra& H1, const HomHopfAlgebra& H2) {
    const std::size_t n1 = H1.dim(), n2 = H2.dim();
    // middle flip (V1 V2)(V1 V2) -> (V1 V1)(V2 V2) and back
    const LinearMap mid = LinearMap::identity(n1).kron(flip(n2, n1)).kron(LinearMap::identity(n2));
    const LinearMap mid_back = LinearMap::identity(n1).kron(flip(n1, n2)).kron(LinearMap::identity(n2));
    HomHopfAlgebra T;
    T.bi.alg = HomAlgebra(H1.alg().mul.kron(H2.alg().mul) * mid, outer(H1.alg().unit, H2.alg().unit, n2),
                          H1.alg().alpha.kron(H2.alg().alpha));
    T.bi.co = HomCoalgebra(mid_back * H1.co().comul.kron(H2.co().comul), H1.co().counit.kron(H2.co().counit),
                           H1.co().gamma.kron(H2.co().gamma));
    T.S = H1.S.kron(H2.S);
    if (H1.S_inv && H2.S_inv) T.S_inv = H1.S_inv->kron(*H2.S_inv);
    if (!check_hom_hopf(T).passed()) throw Error("StructureCheckFailed", "tensor product fails the Hom-Hopf axioms");
    return T;
}

HomHopfAlgebra dual_hopf(const HomHopfAlgebra& H) {
    HomHopfAlgebra D;
    const LinearMap a = H.alg().alpha_inv.transpose();
    D.bi.alg = HomAlgebra(H.co().comul.transpose(), H.co().counit.transpose().col(0), a);
    LinearMap cou(H.dim(), 1);
    for (const auto& [i, x] : H.alg().unit) cou.set_col(i, basis_vec(0, x));
    D.bi.co = HomCoalgebra(H.alg().mul.transpose(), cou, a);
    D.S = H.S.transpose();
    if (H.S_inv) D.S_inv = H.S_inv->transpose();
    if (!check_hom_hopf(D).passed()) throw Error("DualCheckFailed", "dual fails the Hom-Hopf axioms");
    return D;
}

LinearMap convolution_invert(const LinearMap& f, const HomAlgebra& A, const HomCoalgebra& C) {
    const std::size_t na = A.dim, nc = C.dim;
    if (f.dom() != nc || f.cod() != na) throw Error("DimensionMismatch", "convolution_invert");
    // unknown g(e_c)_a at index a * nc + c
    std::vector<Vec> rows;
    std::vector<Scalar> rhs;
    for (Index c = 0; c < nc; ++c) {
        std::vector<Acc> left(na, Acc(na * nc)), right(na, Acc(na * nc));
        for (const auto& [k, x] : C.delta(c)) {
            const Index c1 = k / nc, c2 = k % nc;
            for (Index a = 0; a < na; ++a) {
                for (const auto& [o, y] : A.m(basis_vec(a), f.col(c2))) left[o].add(a * nc + c1, x * y);
                for (const auto& [o, y] : A.m(f.col(c1), basis_vec(a))) right[o].add(a * nc + c2, x * y);
            }
        }
        for (Index o = 0; o < na; ++o) {
            const Scalar t = coeff(A.unit, o) * C.eps(c);
            rows.push_back(left[o].take());
            rhs.push_back(t);
            rows.push_back(right[o].take());
            rhs.push_back(t);
        }
    }
    auto sol = solve(rows, rhs, na * nc);
    if (!sol) throw Error("NotInvertible", "convolution equations are inconsistent");
    LinearMap g(nc, na);
    for (Index c = 0; c < nc; ++c) {
        Vec col;
        for (Index a = 0; a < na; ++a)
            if (!sol->x[a * nc + c].is_zero()) col.emplace_back(a, sol->x[a * nc + c]);
        g.set_col(c, col);
    }
    return g;
}

HomHopfAlgebra cyclic_group_algebra(std::size_t n) {
    LinearMap mul(n * n, n), com(n, n * n), cou(n, 1), S(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) mul.set_col(static_cast<Index>(i * n + j), basis_vec(static_cast<Index>((i + j) % n)));
        com.set_col(i, basis_vec(static_cast<Index>(i * n + i)));
        cou.set_col(i, basis_vec(0));
        S.set_col(i, basis_vec(static_cast<Index>((n - i) % n)));
    }
    HomHopfAlgebra H;
    H.bi.alg = HomAlgebra(mul, basis_vec(0), LinearMap::identity(n));
    H.bi.co = HomCoalgebra(com, cou, LinearMap::identity(n));
    H.S = S;
    H.S_inv = S;
    return H;
}

HomHopfAlgebra sweedler() {
    // basis 0 = 1, 1 = g, 2 = x, 3 = gx
    struct T {
        Index i, j, k;
        long c;
    };
    const T tab[] = {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1}, {1, 0, 1, 1}, {1, 1, 0, 1},
                     {1, 2, 3, 1}, {1, 3, 2, 1}, {2, 0, 2, 1}, {2, 1, 3, -1}, {3, 0, 3, 1}, {3, 1, 2, -1}};
    LinearMap mul(16, 4);
    for (const auto& t : tab) mul.set_col(t.i * 4 + t.j, basis_vec(t.k, t.c));
    LinearMap com(4, 16);
    com.set_col(0, basis_vec(0));
    com.set_col(1, basis_vec(5));
    com.set_col(2, Vec{{2 * 4 + 0, 1}, {1 * 4 + 2, 1}});  // x (x) 1 + g (x) x
    com.set_col(3, Vec{{0 * 4 + 3, 1}, {3 * 4 + 1, 1}});  // 1 (x) gx + gx (x) g
    LinearMap cou(4, 1);
    cou.set_col(0, basis_vec(0));
    cou.set_col(1, basis_vec(0));
    LinearMap S(4, 4);
    S.set_col(0, basis_vec(0));
    S.set_col(1, basis_vec(1));
    S.set_col(2, basis_vec(3, -1));
    S.set_col(3, basis_vec(2));
    HomHopfAlgebra H;
    H.bi.alg = HomAlgebra(mul, basis_vec(0), LinearMap::identity(4));
    H.bi.co = HomCoalgebra(com, cou, LinearMap::identity(4));
    H.S = S;
    H.S_inv = S.inverse();
    return H;
}

HomHopfAlgebra ground_hopf() {
    LinearMap one = LinearMap::identity(1);
    HomHopfAlgebra H;
    H.bi.alg = HomAlgebra(one, basis_vec(0), one);
    H.bi.co = HomCoalgebra(one, one, one);
    H.S = one;
    H.S_inv = one;
    return H;
}

}  // namespace homcat
