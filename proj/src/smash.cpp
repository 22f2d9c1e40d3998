#include "homcat/smash.hpp"

namespace homcat {

Vec RightModuleAlgebra::act(const Vec& b, const Vec& h) const {
    Acc acc(dim());
    for (const auto& [i, x] : b)
        for (const auto& [j, y] : h) acc.add(act(i, j), x * y);
    return acc.take();
}

CheckReport check_right_module_algebra(const RightModuleAlgebra& B) {
    const HomAlgebra& Bm = B.algebra;
    const HomAlgebra& Ha = B.H.alg;
    const HomCoalgebra& Hc = B.H.co;
    const std::size_t nb = B.dim(), nh = B.H.dim();
    CheckReport r = check_each(nb, [&](Index f, CheckReport& rep) {
        const Vec ef = basis_vec(f), zf = Bm.al(ef);
        rep.expect("unit", {f}, B.act(ef, Ha.unit), zf);
        for (Index h = 0; h < nh; ++h) {
            const Vec eh = basis_vec(h);
            rep.expect("zeta", {f, h}, Bm.al(B.act(f, h)), B.act(zf, Ha.al(eh)));
            for (Index k = 0; k < nh; ++k)
                rep.expect("hom_assoc", {f, h, k}, B.act(B.act(f, h), Ha.al(basis_vec(k))), B.act(zf, Ha.m(h, k)));
            for (Index g = 0; g < nb; ++g) {
                Vec rhs;
                for (const auto& [k, x] : Hc.delta(h))
                    rhs = add(rhs, Bm.m(B.act(f, static_cast<Index>(k / nh)), B.act(g, static_cast<Index>(k % nh))), x);
                rep.expect("mult", {f, g, h}, B.act(Bm.m(f, g), eh), rhs);
            }
        }
    });
    for (Index h = 0; h < nh; ++h) r.expect("unit_action", {h}, B.act(Bm.unit, basis_vec(h)), scaled(Bm.unit, Hc.eps(h)));
    return r;
}

RightModuleAlgebra dual_module_algebra(const ModuleCoalgebra& C) {
    const HomCoalgebra& Cc = C.coalgebra;
    const std::size_t nc = C.dim(), nh = C.H.dim();
    RightModuleAlgebra B;
    B.H = C.H;
    B.algebra = HomAlgebra(Cc.comul.transpose(), Cc.counit.transpose().col(0), Cc.gamma_inv.transpose());
    B.action = LinearMap(nc * nh, nc);
    std::vector<Acc> cols(nc * nh, Acc(nc));
    for (Index h = 0; h < nh; ++h)
        for (Index c = 0; c < nc; ++c)
            for (const auto& [f, x] : C.module.act(basis_vec(h), Cc.al(basis_vec(c), -2))) cols[f * nh + h].add(c, x);
    for (Index k = 0; k < nc * nh; ++k) B.action.set_col(k, cols[k].take());
    if (!check_right_module_algebra(B).passed()) throw Error("StructureCheckFailed", "dual module algebra");
    return B;
}

HomBialgebra dual_bialgebra(const HomBialgebra& C) {
    const std::size_t n = C.dim();
    const LinearMap a = C.alg.alpha_inv.transpose();
    LinearMap cou(n, 1);
    for (const auto& [i, x] : C.alg.unit) cou.set_col(i, basis_vec(0, x));
    return {HomAlgebra(C.co.comul.transpose(), C.co.counit.transpose().col(0), a),
            HomCoalgebra(C.alg.mul.transpose(), cou, a)};
}

RightModuleAlgebra trivial_right_module_algebra(const HomBialgebra& H, const HomAlgebra& Bm) {
    const std::size_t nb = Bm.dim, nh = H.dim();
    RightModuleAlgebra B{H, Bm, LinearMap(nb * nh, nb)};
    for (Index b = 0; b < nb; ++b)
        for (Index h = 0; h < nh; ++h) B.action.set_col(static_cast<Index>(b * nh + h), scaled(Bm.alpha.col(b), H.co.eps(h)));
    return B;
}

SmashProduct smash_product(const ComoduleAlgebra& A, const RightModuleAlgebra& B) {
    const HomAlgebra& Am = A.algebra;
    const HomAlgebra& Bm = B.algebra;
    const std::size_t na = A.dim(), nb = B.dim(), nh = A.H.dim(), n = na * nb;
    if (B.H.dim() != nh) throw Error("DimensionMismatch", "A and B over different Hopf algebras");
    LinearMap mul(n * n, n);
    std::vector<Vec> bz(nb);
    for (Index b = 0; b < nb; ++b) bz[b] = Bm.al(basis_vec(b), -1);
    for (Index a = 0; a < na; ++a)
        for (Index b = 0; b < nb; ++b)
            for (Index c = 0; c < na; ++c)
                for (Index d = 0; d < nb; ++d) {
                    Acc acc(n);
                    for (const auto& [k, x] : A.rho(c)) {
                        const Vec left = Am.m(basis_vec(a), Am.al(basis_vec(static_cast<Index>(k / nh))));
                        const Vec right = Bm.m(B.act(bz[b], basis_vec(static_cast<Index>(k % nh))), basis_vec(d));
                        acc.add_outer(left, right, nb, x);
                    }
                    mul.set_col(static_cast<Index>((a * nb + b) * n + c * nb + d), acc.take());
                }
    SmashProduct P{A, B, HomAlgebra(mul, outer(Am.unit, Bm.unit, nb), Am.alpha.kron(Bm.alpha))};
    if (!check_hom_algebra(P.product).passed()) throw Error("StructureCheckFailed", "smash product is not Hom-associative");
    return P;
}

SmashProduct doi_smash(const DoiDatum& D) { return smash_product(D.A, dual_module_algebra(D.C)); }

CheckReport check_smash_conditions(const SmashProduct& P, const HomBialgebra& A_bi, const HomBialgebra& B_bi) {
    const HomAlgebra& Am = P.A.algebra;
    const HomAlgebra& Bm = P.B.algebra;
    const std::size_t na = P.A.dim(), nb = P.B.dim(), nh = P.A.H.dim();
    if (A_bi.alg.mul != Am.mul || B_bi.alg.mul != Bm.mul) throw Error("DimensionMismatch", "bialgebras do not match the smash factors");
    const std::size_t n4 = na * na * nb * nb;
    // a (x) a' (x) b (x) b' -> ((a * na + a') * nb + b) * nb + b'
    auto put = [&](Acc& acc, const Vec& aa, const Vec& bb, const Scalar& c) { acc.add_outer(aa, bb, nb * nb, c); };
    return check_each(na, [&](Index a, CheckReport& rep) {
        for (Index b = 0; b < nb; ++b) {
            const Vec zb = Bm.al(basis_vec(b), -1);
            Acc lhs(n4), rhs(n4);
            for (const auto& [k, x] : P.A.rho(a))
                put(lhs, A_bi.co.delta(Am.al(basis_vec(static_cast<Index>(k / nh)))),
                    B_bi.co.delta(P.B.act(zb, basis_vec(static_cast<Index>(k % nh)))), x);
            for (const auto& [ka, y] : A_bi.co.delta(a))
                for (const auto& [p, x1] : P.A.rho(static_cast<Index>(ka / na)))
                    for (const auto& [q, x2] : P.A.rho(static_cast<Index>(ka % na)))
                        for (const auto& [kb, z] : B_bi.co.delta(b)) {
                            const Vec aa = outer(Am.al(basis_vec(static_cast<Index>(p / nh))),
                                                 Am.al(basis_vec(static_cast<Index>(q / nh))), na);
                            const Vec bb = outer(P.B.act(Bm.al(basis_vec(static_cast<Index>(kb / nb)), -1), basis_vec(static_cast<Index>(p % nh))),
                                                 P.B.act(Bm.al(basis_vec(static_cast<Index>(kb % nb)), -1), basis_vec(static_cast<Index>(q % nh))),
                                                 nb);
                            put(rhs, aa, bb, y * x1 * x2 * z);
                        }
            rep.expect("delta_compat", {a, b}, lhs.take(), rhs.take());
            Scalar l = 0;
            for (const auto& [k, x] : P.A.rho(a))
                l += x * A_bi.co.eps(static_cast<Index>(k / nh)) * B_bi.co.eps(P.B.act(b, static_cast<Index>(k % nh)));
            const Scalar r = A_bi.co.eps(a) * B_bi.co.eps(b);
            if (l != r) rep.fail("eps_compat", {a, b}, normalized({{0, l}}), normalized({{0, r}}));
        }
    });
}

HomBialgebra smash_bialgebra(const SmashProduct& P, const HomBialgebra& A_bi, const HomBialgebra& B_bi) {
    const CheckReport r = check_smash_conditions(P, A_bi, B_bi);
    if (r.failed("delta_compat")) throw Error("ConditionFailed", "delta_compat");
    if (r.failed("eps_compat")) throw Error("ConditionFailed", "eps_compat");
    const std::size_t na = P.A.dim(), nb = P.B.dim(), n = na * nb;
    LinearMap com(n, n * n), cou(n, 1);
    for (Index a = 0; a < na; ++a)
        for (Index b = 0; b < nb; ++b) {
            Acc acc(n * n);
            for (const auto& [ka, x] : A_bi.co.delta(a))
                for (const auto& [kb, y] : B_bi.co.delta(b))
                    acc.add(static_cast<Index>(((ka / na) * nb + kb / nb) * n + (ka % na) * nb + kb % nb), x * y);
            const Index i = static_cast<Index>(a * nb + b);
            com.set_col(i, acc.take());
            cou.set_col(i, normalized({{0, A_bi.co.eps(a) * B_bi.co.eps(b)}}));
        }
    return {P.product, HomCoalgebra(com, cou, P.product.alpha)};
}

HomHopfAlgebra smash_hopf(const SmashProduct& P, const HomHopfAlgebra& A, const HomHopfAlgebra& B) {
    HomHopfAlgebra out;
    out.bi = smash_bialgebra(P, A.bi, B.bi);
    const HomAlgebra& Am = P.A.algebra;
    const HomAlgebra& Bm = P.B.algebra;
    const HomAlgebra& Ha = P.A.H.alg;
    const std::size_t na = P.A.dim(), nb = P.B.dim(), nh = P.A.H.dim(), n = na * nb;
    out.S = LinearMap(n, n);
    for (Index a = 0; a < na; ++a) {
        const Vec rs = P.A.comodule.co(A.S.apply(Am.al(basis_vec(a))));
        for (Index b = 0; b < nb; ++b) {
            const Vec sb = B.S.apply(Bm.al(basis_vec(b), -1));
            Acc acc(n);
            for (const auto& [k, x] : rs)
                acc.add_outer(basis_vec(static_cast<Index>(k / nh)), P.B.act(sb, Ha.al(basis_vec(static_cast<Index>(k % nh)), -1)), nb, x);
            out.S.set_col(static_cast<Index>(a * nb + b), acc.take());
        }
    }
    if (!check_antipode(out).passed()) throw Error("AntipodeCheckFailed", "smash antipode");
    return out;
}

HomModule doi_to_smash(const DoiModule& M) {
    const SmashProduct P = doi_smash(M.datum);
    const std::size_t na = P.A.dim(), nc = P.B.dim(), nm = M.dim;
    const HomAlgebra& Am = P.A.algebra;
    LinearMap act(na * nc * nm, nm);
    for (Index a = 0; a < na; ++a) {
        const Vec b2 = Am.al(basis_vec(a), 2);
        for (Index m = 0; m < nm; ++m) {
            std::vector<Acc> byf(nc, Acc(nm));
            for (const auto& [k, y] : M.rho(m))
                byf[k % nc].add(M.act(b2, M.mu.col(static_cast<Index>(k / nc))), y);
            for (Index f = 0; f < nc; ++f) act.set_col(static_cast<Index>((a * nc + f) * nm + m), byf[f].take());
        }
    }
    return {P.product, act, M.mu};
}

DoiModule smash_to_doi(const DoiDatum& D, const HomModule& N) {
    const SmashProduct P = doi_smash(D);
    if (N.algebra.mul != P.product.mul) throw Error("DatumMismatch", "module over another smash product");
    const std::size_t na = P.A.dim(), nc = P.B.dim(), nm = N.dim;
    const Vec& eps = P.B.algebra.unit;
    const LinearMap mu2 = N.mu_inv * N.mu_inv;
    LinearMap act(na * nm, nm), co(nm, nm * nc);
    for (Index a = 0; a < na; ++a) {
        const Vec x = outer(P.A.algebra.al(basis_vec(a), -2), eps, nc);
        for (Index m = 0; m < nm; ++m) act.set_col(static_cast<Index>(a * nm + m), N.act(x, basis_vec(m)));
    }
    for (Index m = 0; m < nm; ++m) {
        Acc acc(nm * nc);
        for (Index i = 0; i < nc; ++i)
            acc.add_outer(mu2.apply(N.act(outer(P.A.algebra.unit, basis_vec(i), nc), basis_vec(m))), basis_vec(i), nc);
        co.set_col(m, acc.take());
    }
    DoiModule out(D, act, co, N.mu);
    if (!check_hom_comodule(out.as_comodule()).passed()) throw Error("ReconstructionFailed", "coaction fails the comodule axioms");
    return out;
}

Vec smash_element_from(const MonoidalDoiDatum& G, const LinearMap& Q) {
    const std::size_t na = G.datum.A.dim(), nc = G.datum.C.dim(), N = na * nc;
    const LinearMap bi = G.datum.A.algebra.alpha_inv;
    Acc acc(N * N);
    for (Index i = 0; i < nc; ++i)
        for (Index j = 0; j < nc; ++j)
            for (const auto& [k, x] : Q.col(static_cast<Index>(i * nc + j)))
                for (const auto& [p, y] : bi.col(static_cast<Index>(k / na)))
                    for (const auto& [q, z] : bi.col(static_cast<Index>(k % na)))
                        acc.add(static_cast<Index>((p * nc + i) * N + q * nc + j), x * y * z);
    return acc.take();
}

DrinfeldDouble drinfeld_double(const HomHopfAlgebra& H) {
    const MonoidalDoiDatum G = yd_datum(H);
    DrinfeldDouble out;
    out.smash = doi_smash(G.datum);
    const HomHopfAlgebra Cd = dual_hopf(opposite(H));
    out.hopf = smash_hopf(out.smash, H, Cd);
    const std::size_t N = out.smash.dim();
    out.R_candidate = flip(N, N).apply(smash_element_from(G, yd_braiding_map(G)));
    out.qt_report = check_quasitriangular(make_qt(out.hopf, out.R_candidate));
    return out;
}

}  // namespace homcat
