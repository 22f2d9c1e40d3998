#include "homcat/doicat.hpp"

namespace homcat {

YDModule::YDModule(HomHopfAlgebra H_, LinearMap action_, LinearMap coaction_, LinearMap mu_)
    : H(std::move(H_)), dim(mu_.dom()), action(std::move(action_)), coaction(std::move(coaction_)), mu(std::move(mu_)) {
    if (action.dom() != H.dim() * dim || action.cod() != dim || coaction.dom() != dim ||
        coaction.cod() != dim * H.dim() || mu.cod() != dim)
        throw Error("DimensionMismatch", "YD module");
    mu_inv = mu.inverse();
}

Vec YDModule::act(const Vec& h, const Vec& m) const {
    Acc acc(dim);
    for (const auto& [i, x] : h)
        for (const auto& [j, y] : m) acc.add(act(i, j), x * y);
    return acc.take();
}

CheckReport check_monoidal_datum(const MonoidalDoiDatum& G) {
    const DoiDatum& D = G.datum;
    const HomAlgebra& Cm = G.c_bialgebra.alg;
    const HomCoalgebra& Ad = G.a_bialgebra.co;
    const std::size_t na = D.A.dim(), nc = D.C.dim(), nh = D.H.dim();
    CheckReport r;
    if (G.a_bialgebra.alg.mul != D.A.algebra.mul || G.a_bialgebra.alg.alpha != D.A.algebra.alpha ||
        G.c_bialgebra.co.comul != D.C.coalgebra.comul || G.c_bialgebra.co.gamma != D.C.coalgebra.gamma)
        r.fail("carrier", {});
    r.merge(check_each(na, [&](Index a, CheckReport& rep) {
        for (Index c = 0; c < nc; ++c)
            for (Index d = 0; d < nc; ++d) {
                Acc lhs(na * na * nc), rhs(na * na * nc);
                for (const auto& [k, x] : Ad.delta(a))
                    for (const auto& [p, y] : D.A.rho(k / na))
                        for (const auto& [q, z] : D.A.rho(k % na)) {
                            const Vec cd = Cm.m(D.C.act(p % nh, c), D.C.act(q % nh, d));
                            lhs.add_outer(basis_vec(static_cast<Index>((p / nh) * na + q / nh)), cd, nc, x * y * z);
                        }
                const Vec cd = Cm.m(c, d);
                for (const auto& [k, x] : D.A.rho(a))
                    rhs.add_outer(Ad.delta(k / nh), D.C.module.act(basis_vec(k % nh), cd), nc, x);
                rep.expect("monoidal_compat", {a, c, d}, lhs.take(), rhs.take());
            }
        Vec rhs;
        for (const auto& [k, x] : D.A.rho(a)) rhs = add(rhs, D.C.module.act(basis_vec(k % nh), Cm.unit), x * Ad.eps(k / nh));
        rep.expect("unit_compat", {a}, scaled(Cm.unit, Ad.eps(a)), rhs);
    }));
    return r;
}

DoiModule tensor_doi_unchecked(const MonoidalDoiDatum& G, const DoiModule& M, const DoiModule& N) {
    const DoiDatum& D = G.datum;
    const HomCoalgebra& Ad = G.a_bialgebra.co;
    const HomAlgebra& Cm = G.c_bialgebra.alg;
    const std::size_t na = D.A.dim(), nc = D.C.dim(), nm = M.dim, nn = N.dim, n = nm * nn;
    LinearMap act(na * n, n), co(n, n * nc);
    for (Index a = 0; a < na; ++a) {
        const Vec& d = Ad.delta(a);
        for (Index m = 0; m < nm; ++m)
            for (Index k = 0; k < nn; ++k) {
                Acc acc(n);
                for (const auto& [p, x] : d) acc.add_outer(M.act(p / na, m), N.act(p % na, k), nn, x);
                act.set_col(static_cast<Index>(a * n + m * nn + k), acc.take());
            }
    }
    for (Index m = 0; m < nm; ++m)
        for (Index k = 0; k < nn; ++k) {
            Acc acc(n * nc);
            for (const auto& [p, x] : M.rho(m))
                for (const auto& [q, y] : N.rho(k))
                    acc.add_outer(basis_vec(static_cast<Index>((p / nc) * nn + q / nc)), Cm.m(p % nc, q % nc), nc, x * y);
            co.set_col(static_cast<Index>(m * nn + k), acc.take());
        }
    return {D, act, co, M.mu.kron(N.mu)};
}

namespace {

void require_monoidal(const MonoidalDoiDatum& G) {
    if (!check_monoidal_datum(G).passed()) throw Error("DatumNotMonoidal", "monoidal compatibility fails");
}

void require_same(const DoiDatum& D, const DoiModule& M) {
    if (M.datum.fingerprint() != D.fingerprint()) throw Error("DatumMismatch", "module over a different datum");
}

}  // namespace

DoiModule tensor_doi(const MonoidalDoiDatum& G, const DoiModule& M, const DoiModule& N, bool verify) {
    require_monoidal(G);
    require_same(G.datum, M);
    require_same(G.datum, N);
    DoiModule T = tensor_doi_unchecked(G, M, N);
    if (verify && !check_doi_module(T).passed()) throw Error("DatumNotMonoidal", "tensor product is not a Doi module");
    return T;
}

DoiModule unit_doi(const MonoidalDoiDatum& G) {
    require_monoidal(G);
    const std::size_t na = G.datum.A.dim(), nc = G.datum.C.dim();
    LinearMap act(na, 1), co(1, nc);
    for (Index a = 0; a < na; ++a) act.set_col(a, basis_vec(0, G.a_bialgebra.co.eps(a)));
    co.set_col(0, G.c_bialgebra.alg.unit);
    return {G.datum, act, co, LinearMap::identity(1)};
}

LinearMap associator(const DoiModule& M, const DoiModule& N, const DoiModule& P) {
    return M.mu.kron(LinearMap::identity(N.dim)).kron(P.mu_inv);
}

LinearMap left_unitor(const DoiModule& M) { return M.mu; }
LinearMap right_unitor(const DoiModule& M) { return M.mu; }

CheckReport check_coherence_on(const MonoidalDoiDatum& G, const DoiModule& M, const DoiModule& N, const DoiModule& P,
                               const DoiModule& Q) {
    CheckReport r;
    const DoiModule MN = tensor_doi(G, M, N, false), NP = tensor_doi(G, N, P, false);
    const DoiModule left = tensor_doi(G, MN, P, false), right = tensor_doi(G, M, NP, false);
    const LinearMap a = associator(M, N, P);
    r.merge(check_doi_morphism(a, left, right));
    try {
        a.inverse();
    } catch (const Error&) {
        r.fail("associator_invertible", {});
    }
    auto id = [](std::size_t n) { return LinearMap::identity(n); };
    const DoiModule PQ = tensor_doi(G, P, Q, false);
    // a_{M,N,P(x)Q} a_{M(x)N,P,Q} = (id (x) a_{N,P,Q}) a_{M,N(x)P,Q} (a_{M,N,P} (x) id)
    const LinearMap lhs = associator(M, N, PQ) * associator(MN, P, Q);
    const LinearMap rhs = id(M.dim).kron(associator(N, P, Q)) * associator(M, NP, Q) * a.kron(id(Q.dim));
    if (lhs != rhs) r.fail("pentagon", {});
    // (id (x) l_N) a_{M,1,N} = r_M (x) id
    const DoiModule I = unit_doi(G);
    const LinearMap tri = id(M.dim).kron(left_unitor(N)) * associator(M, I, N);
    if (tri != right_unitor(M).kron(id(N.dim))) r.fail("triangle", {});
    return r;
}

CheckReport check_yd(const YDModule& M) {
    const HomHopfAlgebra& H = M.H;
    const std::size_t nh = H.dim(), n = M.dim;
    return check_each(nh, [&](Index h, CheckReport& rep) {
        for (Index m = 0; m < n; ++m) {
            Acc lhs(n * nh), rhs(n * nh);
            const Vec mi = M.mu_inv.col(m);
            for (const auto& [k, x] : H.co().delta(h)) {
                const Index h1 = k / nh, h2 = k % nh;
                for (const auto& [p, y] : M.coaction.col(m)) lhs.add_outer(M.act(h1, p / nh), H.alg().m(h2, p % nh), nh, x * y);
                for (const auto& [p, y] : M.rho(M.act(basis_vec(h2), mi)))
                    rhs.add_outer(M.mu.col(p / nh), H.alg().m(p % nh, h1), nh, x * y);
            }
            rep.expect("yd_compat", {h, m}, lhs.take(), rhs.take());
        }
    });
}

CheckReport check_yd_alt(const YDModule& M) {
    const HomHopfAlgebra& H = M.H;
    const LinearMap Si = H.antipode_inverse();
    const std::size_t nh = H.dim(), n = M.dim;
    return check_each(nh, [&](Index h, CheckReport& rep) {
        for (Index m = 0; m < n; ++m) {
            Acc rhs(n * nh);
            for (const auto& [k, x] : H.co().delta(h)) {
                const Vec s = Si.col(k / nh);
                for (const auto& [l, y] : H.co().delta(k % nh)) {
                    const Vec a21 = H.alg().al(basis_vec(l / nh));
                    for (const auto& [p, z] : M.coaction.col(m)) {
                        const Vec right = H.alg().m(H.alg().m(basis_vec(l % nh), H.alg().al(basis_vec(p % nh), -1)), s);
                        rhs.add_outer(M.act(a21, basis_vec(p / nh)), right, nh, x * y * z);
                    }
                }
            }
            rep.expect("yd_compat_alt", {h, m}, M.rho(M.act(h, m)), rhs.take());
        }
    });
}

bool yd_equivalence(const YDModule& M) { return check_yd(M).passed() == check_yd_alt(M).passed(); }

MonoidalDoiDatum yd_datum(const HomHopfAlgebra& H) {
    const std::size_t n = H.dim();
    const LinearMap Si = H.antipode_inverse();
    const HomHopfAlgebra Hop = opposite(H);
    const HomHopfAlgebra HH = tensor_hopf(Hop, H);
    const HomAlgebra& A = H.alg();
    const std::size_t nh = n * n;
    // h -> alpha(h21) (x) (S^-1(alpha^-1(h1)) (x) h22)
    LinearMap co(n, n * nh);
    for (Index h = 0; h < n; ++h) {
        Acc acc(n * nh);
        for (const auto& [k, x] : H.co().delta(h)) {
            const Vec s = Si.apply(A.al(basis_vec(k / n), -1));
            for (const auto& [l, y] : H.co().delta(k % n))
                acc.add_outer(A.al(basis_vec(l / n)), outer(s, basis_vec(l % n), n), nh, x * y);
        }
        co.set_col(h, acc.take());
    }
    // (h (x) k) . c = (k alpha^-1(c)) alpha(h)
    LinearMap act(nh * n, n);
    for (Index h = 0; h < n; ++h)
        for (Index k = 0; k < n; ++k)
            for (Index c = 0; c < n; ++c)
                act.set_col(static_cast<Index>((h * n + k) * n + c),
                            A.m(A.m(basis_vec(k), A.al(basis_vec(c), -1)), A.al(basis_vec(h))));
    MonoidalDoiDatum G;
    G.datum.H = HH;
    G.datum.A = {HH.bi, A, HomComodule(HH.co(), co, A.alpha)};
    G.datum.C = {HH.bi, H.co(), HomModule(HH.alg(), act, A.alpha)};
    G.a_bialgebra = H.bi;
    G.c_bialgebra = Hop.bi;
    CheckReport r = check_hom_comodule(G.datum.A.comodule);
    r.merge(check_comodule_algebra(G.datum.A));
    r.merge(check_hom_module(G.datum.C.module));
    r.merge(check_module_coalgebra(G.datum.C));
    r.merge(check_monoidal_datum(G));
    if (!r.passed()) throw Error("ComponentCheckFailed", "YD datum fails " + r.failures.front().axiom);
    return G;
}

namespace {

HomHopfAlgebra yd_base(const DoiDatum& D) {
    const std::size_t n = D.A.dim();
    if (D.C.dim() != n || D.H.dim() != n * n) throw Error("DatumMismatch", "not a Yetter-Drinfeld datum");
    HomHopfAlgebra H;
    H.bi.alg = D.A.algebra;
    H.bi.co = D.C.coalgebra;
    H.S = convolution_invert(LinearMap::identity(n), H.alg(), H.co());
    return H;
}

}  // namespace

DoiModule yd_to_doi(const MonoidalDoiDatum& G, const YDModule& M) {
    if (M.H.alg().mul != G.datum.A.algebra.mul || M.H.co().comul != G.datum.C.coalgebra.comul ||
        M.H.alpha() != G.datum.A.algebra.alpha || G.datum.H.dim() != M.H.dim() * M.H.dim())
        throw Error("DatumMismatch", "YD module over a different Hopf algebra");
    return {G.datum, M.action, M.coaction, M.mu};
}

YDModule doi_to_yd(const DoiModule& M) { return {yd_base(M.datum), M.action, M.coaction, M.mu}; }

}  // namespace homcat
