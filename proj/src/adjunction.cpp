#include "homcat/adjunction.hpp"

namespace homcat {

namespace {

LinearMap id(std::size_t n) { return LinearMap::identity(n); }

void expect_maps(CheckReport& r, const std::string& axiom, const LinearMap& f, const LinearMap& g) {
    for (Index j = 0; j < f.dom(); ++j) r.expect(axiom, {j}, f.col(j), g.col(j));
}

// Coordinates of v in S (x) k^n, index s * n + c.
Vec coords_left(const Subspace& S, const Vec& v, std::size_t n, const char* err) {
    std::vector<Vec> parts(n);
    for (const auto& [k, x] : v) parts[k % n].emplace_back(static_cast<Index>(k / n), x);
    Acc acc(S.dim() * n);
    for (Index c = 0; c < n; ++c) {
        if (parts[c].empty()) continue;
        if (!S.contains(parts[c])) throw Error(err, "vector leaves the subspace");
        for (const auto& [s, x] : S.coords(parts[c])) acc.add(static_cast<Index>(s * n + c), x);
    }
    return acc.take();
}

// Coordinates of v in k^n (x) S, index m * dim S + s.
Vec coords_right(const Subspace& S, const Vec& v, std::size_t n, const char* err) {
    const std::size_t amb = S.ambient_dim();
    std::vector<Vec> parts(n);
    for (const auto& [k, x] : v) parts[k / amb].emplace_back(static_cast<Index>(k % amb), x);
    Vec out;
    for (Index m = 0; m < n; ++m) {
        if (parts[m].empty()) continue;
        if (!S.contains(parts[m])) throw Error(err, "vector leaves the subspace");
        for (const auto& [s, x] : S.coords(parts[m])) out.emplace_back(static_cast<Index>(m * S.dim() + s), x);
    }
    return out;
}

LinearMap coords_map(const Subspace& S, const LinearMap& f, const char* err) {
    LinearMap out(f.dom(), S.dim());
    for (Index j = 0; j < f.dom(); ++j) {
        if (!S.contains(f.col(j))) throw Error(err, "map leaves the subspace");
        out.set_col(j, S.coords(f.col(j)));
    }
    return out;
}

void same_datum(const DoiDatum& D, const DoiModule& M) {
    if (D.fingerprint() != M.datum.fingerprint()) throw Error("DatumMismatch", "module over a different datum");
}

void same_datum(const DoiDatum& D, const MonoidalDoiDatum& G) {
    if (D.fingerprint() != G.datum.fingerprint()) throw Error("DatumMismatch", "monoidal datum does not match morphism");
}

DoiModule checked(DoiModule M) {
    const CheckReport r = check_doi_module(M);
    if (!r.passed()) throw Error("StructureCheckFailed", "constructed module fails " + r.failures.front().axiom);
    return M;
}

}  // namespace

CheckReport check_datum_morphism(const DoiDatum& S, const DoiDatum& T, const LinearMap& fH, const LinearMap& psi,
                                 const LinearMap& fC) {
    if (fH.dom() != S.H.dim() || fH.cod() != T.H.dim() || psi.dom() != S.A.dim() || psi.cod() != T.A.dim() ||
        fC.dom() != S.C.dim() || fC.cod() != T.C.dim())
        throw Error("DimensionMismatch", "datum morphism");
    CheckReport r;
    const HomAlgebra &H = S.H.alg(), &H2 = T.H.alg();
    expect_maps(r, "phi_H_mult", fH * H.mul, H2.mul * fH.kron(fH));
    r.expect("phi_H_unit", {}, fH.apply(H.unit), H2.unit);
    expect_maps(r, "phi_H_comul", T.H.co().comul * fH, fH.kron(fH) * S.H.co().comul);
    expect_maps(r, "phi_H_counit", T.H.co().counit * fH, S.H.co().counit);
    expect_maps(r, "phi_H_alpha", H2.alpha * fH, fH * H.alpha);
    const HomAlgebra &A = S.A.algebra, &A2 = T.A.algebra;
    expect_maps(r, "psi_A_mult", psi * A.mul, A2.mul * psi.kron(psi));
    r.expect("psi_A_unit", {}, psi.apply(A.unit), A2.unit);
    expect_maps(r, "psi_A_alpha", A2.alpha * psi, psi * A.alpha);
    const HomCoalgebra &C = S.C.coalgebra, &C2 = T.C.coalgebra;
    expect_maps(r, "phi_C_comul", C2.comul * fC, fC.kron(fC) * C.comul);
    expect_maps(r, "phi_C_counit", C2.counit * fC, C.counit);
    expect_maps(r, "phi_C_gamma", C2.gamma * fC, fC * C.gamma);
    // phi(h.c) = phi(h).phi(c)
    expect_maps(r, "action_compat", fC * S.C.module.action, T.C.module.action * fH.kron(fC));
    // rho'(psi(a)) = psi(a[0]) (x) phi(a[1])
    expect_maps(r, "coaction_compat", T.A.comodule.coaction * psi, psi.kron(fH) * S.A.comodule.coaction);
    return r;
}

DatumMorphism::DatumMorphism(DoiDatum s, DoiDatum t, LinearMap fH, LinearMap psi, LinearMap fC)
    : source(std::move(s)), target(std::move(t)), phi_H(std::move(fH)), psi_A(std::move(psi)), phi_C(std::move(fC)) {
    const CheckReport r = check_datum_morphism(source, target, phi_H, psi_A, phi_C);
    if (!r.passed()) throw Error("InvalidMorphism", "datum morphism fails " + r.failures.front().axiom);
}

DatumMorphism identity_morphism(const DoiDatum& D) {
    return {D, D, id(D.H.dim()), id(D.A.dim()), id(D.C.dim())};
}

InducedModule induce(const DatumMorphism& xi, const DoiModule& M) {
    same_datum(xi.source, M);
    const DoiDatum& T = xi.target;
    const HomAlgebra& Ap = T.A.algebra;
    const std::size_t na2 = Ap.dim, na = xi.source.A.dim(), nm = M.dim, n = na2 * nm;
    const std::size_t nh2 = T.H.dim(), nc = xi.source.C.dim(), nc2 = T.C.dim();
    // a' psi(a) (x) m ~ beta'(a') (x) a.mu^-1(m)
    Subspace rel(n);
    for (Index a2 = 0; a2 < na2; ++a2) {
        const Vec b = Ap.al(basis_vec(a2));
        for (Index a = 0; a < na; ++a) {
            const Vec ap = Ap.m(basis_vec(a2), xi.psi_A.col(a));
            for (Index m = 0; m < nm; ++m) {
                Vec v = outer(ap, basis_vec(m), nm);
                v = add(v, outer(b, M.act(basis_vec(a), M.mu_inv.col(m)), nm), -1);
                rel.insert(v);
            }
        }
    }
    LinearMap act(na2 * n, n), co(n, n * nc2);
    for (Index b = 0; b < na2; ++b) {
        const Vec bi = Ap.al(basis_vec(b), -1);
        for (Index a2 = 0; a2 < na2; ++a2) {
            const Vec ba = Ap.m(bi, basis_vec(a2));
            for (Index m = 0; m < nm; ++m) act.set_col(static_cast<Index>(b * n + a2 * nm + m), outer(ba, M.mu.col(m), nm));
        }
    }
    for (Index a2 = 0; a2 < na2; ++a2)
        for (Index m = 0; m < nm; ++m) {
            Acc acc(n * nc2);
            for (const auto& [p, x] : T.A.rho(a2))
                for (const auto& [q, y] : M.rho(m))
                    acc.add_outer(basis_vec(static_cast<Index>((p / nh2) * nm + q / nc)),
                                  T.C.module.act(basis_vec(p % nh2), xi.phi_C.col(q % nc)), nc2, x * y);
            co.set_col(static_cast<Index>(a2 * nm + m), acc.take());
        }
    const LinearMap mu = Ap.alpha.kron(M.mu);
    const Quotient Q = quotient(rel);
    const LinearMap& P = Q.projection;
    const LinearMap R = rel.inclusion();
    if (!(P * act * id(na2).kron(R)).is_zero()) throw Error("WellDefinednessFailure", "action does not descend");
    if (!(P.kron(id(nc2)) * co * R).is_zero()) throw Error("WellDefinednessFailure", "coaction does not descend");
    if (!(P * mu * R).is_zero()) throw Error("WellDefinednessFailure", "mu does not descend");
    DoiModule F(T, P * act * id(na2).kron(Q.section), P.kron(id(nc2)) * co * Q.section, P * mu * Q.section);
    return {checked(std::move(F)), M, rel, P, Q.section};
}

CotensorModule cotensor(const DatumMorphism& xi, const DoiModule& Mp) {
    same_datum(xi.target, Mp);
    const DoiDatum& S = xi.source;
    const HomCoalgebra& C = S.C.coalgebra;
    const std::size_t n2 = Mp.dim, nc = C.dim, na = S.A.dim(), nh = S.H.dim(), n = n2 * nc;
    const LinearMap f = Mp.coaction.kron(id(nc));
    const LinearMap g = Mp.mu_inv.kron(xi.phi_C.kron(C.gamma) * C.comul);
    Subspace E = equalizer(f, g);
    const LinearMap inc = E.inclusion();
    // a.(m' (x) c) = psi(a[0]).m' (x) a[1].c
    LinearMap act(na * n, n), co(n, n * nc);
    for (Index a = 0; a < na; ++a)
        for (Index m = 0; m < n2; ++m)
            for (Index c = 0; c < nc; ++c) {
                Acc acc(n);
                for (const auto& [p, x] : S.A.rho(a))
                    acc.add_outer(Mp.act(xi.psi_A.col(p / nh), basis_vec(m)), S.C.act(p % nh, c), nc, x);
                act.set_col(static_cast<Index>(a * n + m * nc + c), acc.take());
            }
    for (Index m = 0; m < n2; ++m)
        for (Index c = 0; c < nc; ++c) {
            Acc acc(n * nc);
            for (const auto& [k, x] : C.delta(c))
                acc.add_outer(outer(Mp.mu_inv.col(m), basis_vec(k / nc), nc), C.gamma.col(k % nc), nc, x);
            co.set_col(static_cast<Index>(m * nc + c), acc.take());
        }
    const LinearMap mu = Mp.mu.kron(C.gamma);
    const LinearMap act_r = coords_map(E, act * id(na).kron(inc), "RestrictionFailure");
    const LinearMap mu_r = coords_map(E, mu * inc, "RestrictionFailure");
    const LinearMap co_full = co * inc;
    LinearMap co_r(E.dim(), E.dim() * nc);
    for (Index j = 0; j < E.dim(); ++j) co_r.set_col(j, coords_left(E, co_full.col(j), nc, "RestrictionFailure"));
    DoiModule G(S, act_r, co_r, mu_r);
    return {checked(std::move(G)), Mp, std::move(E), inc};
}

LinearMap induce_map(const LinearMap& f, const InducedModule& FM, const InducedModule& FN) {
    const std::size_t na2 = FM.module.datum.A.dim();
    return FN.projection * id(na2).kron(f) * FM.section;
}

LinearMap cotensor_map(const LinearMap& g, const CotensorModule& GM, const CotensorModule& GN) {
    const std::size_t nc = GM.module.datum.C.dim();
    return coords_map(GN.carrier, g.kron(id(nc)) * GM.inclusion, "RestrictionFailure");
}

LinearMap adjunction_unit(const DatumMorphism& xi, const DoiModule& M, const InducedModule& FM, const CotensorModule& GFM) {
    const std::size_t nm = M.dim, nc = xi.source.C.dim();
    const Vec& one = xi.target.A.algebra.unit;
    LinearMap eta(nm, GFM.module.dim);
    for (Index m = 0; m < nm; ++m) {
        Acc acc(FM.module.dim * nc);
        for (const auto& [k, x] : M.rho(m))
            acc.add_outer(FM.projection.apply(outer(one, M.mu_inv.col(k / nc), nm)), basis_vec(k % nc), nc, x);
        const Vec v = acc.take();
        if (!GFM.carrier.contains(v)) throw Error("RestrictionFailure", "unit leaves the cotensor product");
        eta.set_col(m, GFM.carrier.coords(v));
    }
    return eta;
}

LinearMap adjunction_counit(const DatumMorphism& xi, const CotensorModule& GMp, const InducedModule& FGMp) {
    const DoiModule& Mp = GMp.base;
    const HomCoalgebra& C = xi.source.C.coalgebra;
    const std::size_t na2 = xi.target.A.dim(), g = GMp.module.dim, nc = C.dim;
    LinearMap full(na2 * g, Mp.dim);
    for (Index a = 0; a < na2; ++a)
        for (Index j = 0; j < g; ++j) {
            Acc acc(Mp.dim);
            for (const auto& [k, x] : GMp.inclusion.col(j)) {
                const Scalar e = C.eps(k % nc);
                if (!e.is_zero()) acc.add(Mp.act(basis_vec(a), Mp.mu.col(k / nc)), x * e);
            }
            full.set_col(static_cast<Index>(a * g + j), acc.take());
        }
    if (!(full * FGMp.relations.inclusion()).is_zero()) throw Error("WellDefinednessFailure", "counit does not descend");
    return full * FGMp.section;
}

CheckReport check_triangles(const DatumMorphism& xi, const DoiModule& M, const DoiModule& Mp) {
    CheckReport r;
    const InducedModule FM = induce(xi, M);
    const CotensorModule GFM = cotensor(xi, FM.module);
    const LinearMap eta = adjunction_unit(xi, M, FM, GFM);
    r.merge(check_doi_morphism(eta, M, GFM.module));
    const InducedModule FGFM = induce(xi, GFM.module);
    const LinearMap dF = adjunction_counit(xi, GFM, FGFM);
    r.merge(check_doi_morphism(dF, FGFM.module, FM.module));
    if (dF * induce_map(eta, FM, FGFM) != id(FM.module.dim)) r.fail("triangle_F", {});

    const CotensorModule GMp = cotensor(xi, Mp);
    const InducedModule FGMp = induce(xi, GMp.module);
    const LinearMap delta = adjunction_counit(xi, GMp, FGMp);
    r.merge(check_doi_morphism(delta, FGMp.module, Mp));
    const CotensorModule GFGMp = cotensor(xi, FGMp.module);
    const LinearMap etaG = adjunction_unit(xi, GMp.module, FGMp, GFGMp);
    r.merge(check_doi_morphism(etaG, GMp.module, GFGMp.module));
    if (cotensor_map(delta, GFGMp, GMp) * etaG != id(GMp.module.dim)) r.fail("triangle_G", {});
    return r;
}

DoiModule regular_doi(const DoiDatum& D, const Vec& c_unit) {
    const HomAlgebra& A = D.A.algebra;
    const std::size_t n = A.dim, nh = D.H.dim(), nc = D.C.dim();
    LinearMap act(n * n, n), co(n, n * nc);
    for (Index a = 0; a < n; ++a) {
        const Vec ai = A.al(basis_vec(a), -1);
        for (Index b = 0; b < n; ++b) act.set_col(static_cast<Index>(a * n + b), A.m(ai, basis_vec(b)));
    }
    for (Index b = 0; b < n; ++b) {
        Acc acc(n * nc);
        for (const auto& [k, x] : D.A.rho(b)) acc.add_outer(basis_vec(k / nh), D.C.module.act(basis_vec(k % nh), c_unit), nc, x);
        co.set_col(b, acc.take());
    }
    return {D, act, co, A.alpha};
}

LinearMap induced_regular_iso(const DatumMorphism& xi, const InducedModule& FA) {
    const HomAlgebra& Ap = xi.target.A.algebra;
    const std::size_t na2 = Ap.dim, na = xi.source.A.dim();
    LinearMap full(na2 * na, na2);
    for (Index a2 = 0; a2 < na2; ++a2) {
        const Vec ai = Ap.al(basis_vec(a2), -1);
        for (Index b = 0; b < na; ++b) full.set_col(static_cast<Index>(a2 * na + b), Ap.m(ai, xi.psi_A.col(b)));
    }
    if (!(full * FA.relations.inclusion()).is_zero()) throw Error("WellDefinednessFailure", "iso does not descend");
    return full * FA.section;
}

DoiModule pushforward(const DatumMorphism& xi, const DoiModule& M) {
    same_datum(xi.source, M);
    if (!xi.phi_H.is_identity() || !xi.psi_A.is_identity()) throw Error("HypothesisViolated", "pushforward needs phi_H = psi_A = id");
    return checked(DoiModule(xi.target, M.action, id(M.dim).kron(xi.phi_C) * M.coaction, M.mu));
}

DoiModule restrict_scalars(const DatumMorphism& xi, const DoiModule& N) {
    same_datum(xi.target, N);
    if (!xi.phi_H.is_identity() || !xi.phi_C.is_identity()) throw Error("HypothesisViolated", "restriction needs phi_H = phi_C = id");
    return checked(DoiModule(xi.source, N.action * xi.psi_A.kron(id(N.dim)), N.coaction, N.mu));
}

LinearMap restriction_iso(const DatumMorphism& xi, const CotensorModule& GN) {
    const HomCoalgebra& C = xi.source.C.coalgebra;
    const DoiModule& N = GN.base;
    const std::size_t nc = C.dim;
    LinearMap full(N.dim * nc, N.dim);
    for (Index k = 0; k < N.dim * nc; ++k) full.set_col(k, scaled(N.mu.col(k / nc), C.eps(k % nc)));
    return full * GN.inclusion;
}

namespace {

void require_shape(const DatumMorphism& xi, const MonoidalDoiDatum& Gs, const MonoidalDoiDatum& Gt, bool same_a) {
    same_datum(xi.source, Gs);
    same_datum(xi.target, Gt);
    if (!xi.phi_H.is_identity()) throw Error("HypothesisViolated", "phi_H is not the identity");
    if (same_a ? !xi.psi_A.is_identity() : !xi.phi_C.is_identity())
        throw Error("HypothesisViolated", same_a ? "psi_A is not the identity" : "phi_C is not the identity");
}

LinearMap antipode_of(const HomBialgebra& B) { return convolution_invert(id(B.dim()), B.alg, B.co); }

}  // namespace

TensorIdentity tensor_identity_left(const MonoidalDoiDatum& Gs, const MonoidalDoiDatum& Gt, const DatumMorphism& xi,
                                    const DoiModule& M, const DoiModule& N) {
    require_shape(xi, Gs, Gt, true);
    const HomAlgebra& Cm = Gs.c_bialgebra.alg;
    const LinearMap S = antipode_of(Gs.c_bialgebra);
    const std::size_t nm = M.dim, nn = N.dim, nc = Cm.dim;
    const CotensorModule GN = cotensor(xi, N);
    const DoiModule L = tensor_doi(Gs, M, GN.module, false);
    const DoiModule T = tensor_doi(Gt, pushforward(xi, M), N, false);
    const CotensorModule GT = cotensor(xi, T);
    const std::size_t g = GN.module.dim;
    // m (x) (n (x) c) -> (m[0] (x) n) (x) m[1]c
    LinearMap Gamma(nm * g, GT.module.dim);
    for (Index m = 0; m < nm; ++m)
        for (Index j = 0; j < g; ++j) {
            Acc acc(nm * nn * nc);
            for (const auto& [k, x] : GN.inclusion.col(j))
                for (const auto& [q, y] : M.rho(m))
                    acc.add_outer(basis_vec(static_cast<Index>((q / nc) * nn + k / nc)), Cm.m(q % nc, k % nc), nc, x * y);
            const Vec v = acc.take();
            if (!GT.carrier.contains(v)) throw Error("RestrictionFailure", "Gamma leaves the equalizer");
            Gamma.set_col(static_cast<Index>(m * g + j), GT.carrier.coords(v));
        }
    // (m (x) n) (x) c -> mu^2(m[0]) (x) (n (x) S(m[1]) gamma^-2(c))
    const LinearMap mu2 = M.mu.pow(2);
    const HomCoalgebra& C = xi.source.C.coalgebra;
    LinearMap Psi(GT.module.dim, nm * g);
    for (Index j = 0; j < GT.module.dim; ++j) {
        Acc acc(nm * nn * nc);
        for (const auto& [k, x] : GT.inclusion.col(j)) {
            const Index m = k / (nn * nc), n = (k / nc) % nn, c = k % nc;
            const Vec cc = C.al(basis_vec(c), -2);
            for (const auto& [q, y] : M.rho(m))
                acc.add_outer(mu2.col(q / nc), outer(basis_vec(n), Cm.m(S.col(q % nc), cc), nc), nn * nc, x * y);
        }
        Psi.set_col(j, coords_right(GN.carrier, acc.take(), nm, "RestrictionFailure"));
    }
    return {L, GT.module, Gamma, Psi};
}

TensorIdentity tensor_identity_right(const MonoidalDoiDatum& Gs, const MonoidalDoiDatum& Gt, const DatumMorphism& xi,
                                     const DoiModule& M, const DoiModule& N) {
    require_shape(xi, Gs, Gt, true);
    const HomAlgebra& Cm = Gs.c_bialgebra.alg;
    const LinearMap Sbar = antipode_of(Gs.c_bialgebra).inverse();
    const std::size_t nm = M.dim, nn = N.dim, nc = Cm.dim;
    const CotensorModule GN = cotensor(xi, N);
    const DoiModule L = tensor_doi(Gs, GN.module, M, false);
    const DoiModule T = tensor_doi(Gt, N, pushforward(xi, M), false);
    const CotensorModule GT = cotensor(xi, T);
    const std::size_t g = GN.module.dim;
    // (n (x) c) (x) m -> (n (x) m[0]) (x) c m[1]
    LinearMap Gamma(g * nm, GT.module.dim);
    for (Index j = 0; j < g; ++j)
        for (Index m = 0; m < nm; ++m) {
            Acc acc(nn * nm * nc);
            for (const auto& [k, x] : GN.inclusion.col(j))
                for (const auto& [q, y] : M.rho(m))
                    acc.add_outer(basis_vec(static_cast<Index>((k / nc) * nm + q / nc)), Cm.m(k % nc, q % nc), nc, x * y);
            const Vec v = acc.take();
            if (!GT.carrier.contains(v)) throw Error("RestrictionFailure", "Gamma leaves the equalizer");
            Gamma.set_col(static_cast<Index>(j * nm + m), GT.carrier.coords(v));
        }
    // (n (x) m) (x) c -> (n (x) gamma^-2(c) Sbar(m[1])) (x) mu^2(m[0])
    const LinearMap mu2 = M.mu.pow(2);
    const HomCoalgebra& C = xi.source.C.coalgebra;
    LinearMap Psi(GT.module.dim, g * nm);
    for (Index j = 0; j < GT.module.dim; ++j) {
        Acc acc(nn * nc * nm);
        for (const auto& [k, x] : GT.inclusion.col(j)) {
            const Index n = k / (nm * nc), m = (k / nc) % nm, c = k % nc;
            const Vec cc = C.al(basis_vec(c), -2);
            for (const auto& [q, y] : M.rho(m))
                acc.add_outer(outer(basis_vec(n), Cm.m(cc, Sbar.col(q % nc)), nc), mu2.col(q / nc), nm, x * y);
        }
        Psi.set_col(j, coords_left(GN.carrier, acc.take(), nm, "RestrictionFailure"));
    }
    return {L, GT.module, Gamma, Psi};
}

TensorIdentity tensor_identity_dual(const MonoidalDoiDatum& Gs, const MonoidalDoiDatum& Gt, const DatumMorphism& xi,
                                    const DoiModule& M, const DoiModule& N) {
    require_shape(xi, Gs, Gt, false);
    const HomBialgebra& Ab = Gt.a_bialgebra;
    const LinearMap S = antipode_of(Ab);
    const std::size_t na2 = Ab.dim(), nm = M.dim, nn = N.dim;
    const DoiModule Nr = restrict_scalars(xi, N);
    const InducedModule FMN = induce(xi, tensor_doi(Gs, M, Nr, false));
    const InducedModule FM = induce(xi, M);
    const DoiModule R = tensor_doi(Gt, FM.module, N, false);
    // [a' (x) (m (x) n)] -> [a'1 (x) m] (x) a'2.n
    LinearMap full(na2 * nm * nn, R.dim);
    for (Index a = 0; a < na2; ++a)
        for (Index m = 0; m < nm; ++m)
            for (Index n = 0; n < nn; ++n) {
                Acc acc(R.dim);
                for (const auto& [k, x] : Ab.co.delta(a))
                    acc.add_outer(FM.projection.col(static_cast<Index>((k / na2) * nm + m)), N.act(k % na2, n), nn, x);
                full.set_col(static_cast<Index>((a * nm + m) * nn + n), acc.take());
            }
    if (!(full * FMN.relations.inclusion()).is_zero()) throw Error("WellDefinednessFailure", "Gamma does not descend");
    const LinearMap Gamma = full * FMN.section;
    // [a' (x) m] (x) n -> [beta'^2(a'1) (x) (m (x) S(a'2).nu^-2(n))]
    const LinearMap nu2 = N.mu_inv.pow(2);
    LinearMap Psi(R.dim, FMN.module.dim);
    for (Index f = 0; f < FM.module.dim; ++f)
        for (Index n = 0; n < nn; ++n) {
            Acc acc(na2 * nm * nn);
            for (const auto& [am, x] : FM.section.col(f)) {
                const Index a = am / nm, m = am % nm;
                for (const auto& [k, y] : Ab.co.delta(a))
                    acc.add_outer(Ab.alg.al(basis_vec(k / na2), 2), outer(basis_vec(m), N.act(S.col(k % na2), nu2.col(n)), nn),
                                  nm * nn, x * y);
            }
            Psi.set_col(static_cast<Index>(f * nn + n), FMN.projection.apply(acc.take()));
        }
    return {FMN.module, R, Gamma, Psi};
}

DoiDatum counit_datum(const DoiDatum& D) {
    const HomHopfAlgebra k = ground_hopf();
    return {D.H, D.A, {D.H.bi, k.co(), trivial_module(D.H.bi, id(1))}};
}

DatumMorphism counit_morphism(const DoiDatum& D) {
    return {D, counit_datum(D), id(D.H.dim()), id(D.A.dim()), D.C.coalgebra.counit};
}

ForgetIso forget_tensor_iso(const MonoidalDoiDatum& G, const DoiModule& M) {
    if (!check_monoidal_datum(G).passed()) throw Error("DatumNotMonoidal", "monoidal compatibility fails");
    same_datum(G.datum, M);
    const DatumMorphism xi = counit_morphism(G.datum);
    const std::size_t na = G.datum.A.dim(), nc = G.datum.C.dim(), nm = M.dim;
    LinearMap uact(na, 1);
    for (Index a = 0; a < na; ++a) uact.set_col(a, basis_vec(0, G.a_bialgebra.co.eps(a)));
    const DoiModule unit_k(xi.target, uact, id(1), id(1));
    const CotensorModule Creg = cotensor(xi, unit_k);
    const DoiModule L = tensor_doi(G, M, Creg.module, false);
    // Lambda(M): the C-coaction forgotten, k-coaction m -> mu^-1(m) (x) 1
    const DoiModule Lam = checked(DoiModule(xi.target, M.action, M.mu_inv, M.mu));
    const CotensorModule GL = cotensor(xi, Lam);
    const HomAlgebra& Cm = G.c_bialgebra.alg;
    LinearMap iso(L.dim, GL.module.dim);
    for (Index m = 0; m < nm; ++m)
        for (Index j = 0; j < Creg.module.dim; ++j) {
            Acc acc(nm * nc);
            for (const auto& [c, x] : Creg.inclusion.col(j))
                for (const auto& [q, y] : M.rho(m)) acc.add_outer(M.mu.col(q / nc), Cm.m(q % nc, c), nc, x * y);
            const Vec v = acc.take();
            if (!GL.carrier.contains(v)) throw Error("RestrictionFailure", "iso leaves the cotensor product");
            iso.set_col(static_cast<Index>(m * Creg.module.dim + j), GL.carrier.coords(v));
        }
    return {L, GL.module, iso};
}

}  // namespace homcat
