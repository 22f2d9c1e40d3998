#include "homcat/homrep.hpp"

namespace homcat {

namespace {

void need(bool ok, const char* what) {
    if (!ok) throw Error("DimensionMismatch", what);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::uint64_t hash_str(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    return h;
}

std::uint64_t hash_vec(std::uint64_t h, const Vec& v) {
    for (const auto& [i, x] : v) h = mix(mix(h, i), hash_str(x.str()));
    return mix(h, v.size());
}

std::uint64_t hash_map(std::uint64_t h, const LinearMap& f) {
    h = mix(mix(h, f.dom()), f.cod());
    for (Index j = 0; j < f.dom(); ++j) h = hash_vec(mix(h, j), f.col(j));
    return h;
}

std::uint64_t hash_alg(std::uint64_t h, const HomAlgebra& A) { return hash_vec(hash_map(hash_map(h, A.mul), A.alpha), A.unit); }
std::uint64_t hash_co(std::uint64_t h, const HomCoalgebra& C) {
    return hash_map(hash_map(hash_map(h, C.comul), C.counit), C.gamma);
}

}  // namespace

HomModule::HomModule(HomAlgebra algebra_, LinearMap action_, LinearMap mu_, Side side_)
    : algebra(std::move(algebra_)), dim(mu_.dom()), action(std::move(action_)), mu(std::move(mu_)), side(side_) {
    need(mu.cod() == dim, "module mu");
    need(action.dom() == algebra.dim * dim && action.cod() == dim, "module action");
    mu_inv = mu.inverse();
}

const Vec& HomModule::act(Index a, Index m) const {
    return action.col(side == Side::Left ? static_cast<Index>(a * dim + m) : static_cast<Index>(m * algebra.dim + a));
}

Vec HomModule::act(const Vec& a, const Vec& m) const {
    Acc acc(dim);
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : m) acc.add(act(i, j), x * y);
    return acc.take();
}

HomComodule::HomComodule(HomCoalgebra coalgebra_, LinearMap coaction_, LinearMap mu_, Side side_)
    : coalgebra(std::move(coalgebra_)), dim(mu_.dom()), coaction(std::move(coaction_)), mu(std::move(mu_)), side(side_) {
    need(mu.cod() == dim, "comodule mu");
    need(coaction.dom() == dim && coaction.cod() == dim * coalgebra.dim, "comodule coaction");
    mu_inv = mu.inverse();
}

std::uint64_t DoiDatum::fingerprint() const {
    std::uint64_t h = 0;
    h = hash_alg(h, H.alg());
    h = hash_co(h, H.co());
    h = hash_map(h, H.S);
    h = hash_alg(h, A.algebra);
    h = hash_map(hash_map(h, A.comodule.coaction), A.comodule.mu);
    h = hash_co(h, C.coalgebra);
    h = hash_map(hash_map(h, C.module.action), C.module.mu);
    return h;
}

DoiModule::DoiModule(DoiDatum datum_, LinearMap action_, LinearMap coaction_, LinearMap mu_)
    : datum(std::move(datum_)), dim(mu_.dom()), action(std::move(action_)), coaction(std::move(coaction_)), mu(std::move(mu_)) {
    need(mu.cod() == dim, "doi mu");
    need(action.dom() == datum.A.dim() * dim && action.cod() == dim, "doi action");
    need(coaction.dom() == dim && coaction.cod() == dim * datum.C.dim(), "doi coaction");
    mu_inv = mu.inverse();
}

Vec DoiModule::act(const Vec& a, const Vec& m) const {
    Acc acc(dim);
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : m) acc.add(act(i, j), x * y);
    return acc.take();
}

CheckReport check_hom_module(const HomModule& M) {
    const HomAlgebra& A = M.algebra;
    const std::size_t na = A.dim, n = M.dim;
    const bool left = M.side == Side::Left;
    CheckReport r = check_each(n, [&](Index m, CheckReport& rep) {
        const Vec em = basis_vec(m), mm = M.mu.col(m);
        rep.expect("unit", {m}, M.act(A.unit, em), mm);
        for (Index a = 0; a < na; ++a) {
            const Vec ea = basis_vec(a);
            rep.expect("mu_action", {a, m}, M.mu.apply(M.act(a, m)), M.act(A.al(ea), mm));
            for (Index b = 0; b < na; ++b) {
                const Vec eb = basis_vec(b);
                if (left)  // alpha(a).(b.m) = (ab).mu(m)
                    rep.expect("hom_assoc", {a, b, m}, M.act(A.al(ea), M.act(b, m)), M.act(A.m(a, b), mm));
                else  // (m.a).alpha(b) = mu(m).(ab)
                    rep.expect("hom_assoc", {a, b, m}, M.act(A.al(eb), M.act(a, m)), M.act(A.m(a, b), mm));
            }
        }
    });
    return r;
}

CheckReport check_hom_comodule(const HomComodule& M) {
    const HomCoalgebra& C = M.coalgebra;
    const std::size_t nc = C.dim, n = M.dim;
    const bool right = M.side == Side::Right;
    return check_each(n, [&](Index m, CheckReport& rep) {
        const Vec& r = M.co(m);
        Acc l(n * nc * nc), rr(n * nc * nc), ce(n), mul(n * nc);
        for (const auto& [k, x] : r) {
            if (right) {
                const Index m0 = k / nc, c = k % nc;
                l.add_outer(M.co(m0), C.al(basis_vec(c), -1), nc, x);
                rr.add_outer(M.mu_inv.col(m0), C.delta(c), nc * nc, x);
                ce.add(m0, x * C.eps(c));
                mul.add_outer(M.mu.col(m0), C.gamma.col(c), nc, x);
            } else {
                const Index c = k / n, m0 = k % n;
                l.add_outer(C.al(basis_vec(c), -1), M.co(m0), nc * n, x);
                rr.add_outer(C.delta(c), M.mu_inv.col(m0), n, x);
                ce.add(m0, x * C.eps(c));
                mul.add_outer(C.gamma.col(c), M.mu.col(m0), n, x);
            }
        }
        rep.expect("hom_coassoc", {m}, l.take(), rr.take());
        rep.expect("counit", {m}, ce.take(), M.mu_inv.col(m));
        rep.expect("mu_coaction", {m}, M.co(M.mu.col(m)), mul.take());
    });
}

CheckReport check_comodule_algebra(const ComoduleAlgebra& A) {
    const HomAlgebra& B = A.algebra;
    const HomAlgebra& H = A.H.alg;
    const std::size_t n = B.dim, nh = H.dim;
    CheckReport r;
    if (A.comodule.dim != n) throw Error("DimensionMismatch", "comodule algebra carrier");
    if (A.comodule.mu != B.alpha) r.fail("structure_map", {});
    r.merge(check_each(n, [&](Index a, CheckReport& rep) {
        for (Index b = 0; b < n; ++b) {
            Acc rhs(n * nh);
            for (const auto& [k, x] : A.rho(a))
                for (const auto& [l, y] : A.rho(b)) rhs.add_outer(B.m(k / nh, l / nh), H.m(k % nh, l % nh), nh, x * y);
            rep.expect("rho_mult", {a, b}, A.comodule.co(B.m(a, b)), rhs.take());
        }
    }));
    std::vector<Index> supp;
    for (const auto& e : B.unit) supp.push_back(e.first);
    r.expect("rho_unit", supp, A.comodule.co(B.unit), outer(B.unit, H.unit, nh));
    return r;
}

CheckReport check_module_coalgebra(const ModuleCoalgebra& C) {
    const HomCoalgebra& D = C.coalgebra;
    const HomCoalgebra& H = C.H.co;
    const std::size_t n = D.dim, nh = H.dim;
    CheckReport r;
    if (C.module.dim != n) throw Error("DimensionMismatch", "module coalgebra carrier");
    if (C.module.mu != D.gamma) r.fail("structure_map", {});
    r.merge(check_each(nh, [&](Index h, CheckReport& rep) {
        for (Index c = 0; c < n; ++c) {
            const Vec& hc = C.act(h, c);
            Acc rhs(n * n);
            for (const auto& [k, x] : H.delta(h))
                for (const auto& [l, y] : D.delta(c))
                    rhs.add_outer(C.act(k / nh, l / n), C.act(k % nh, l % n), n, x * y);
            rep.expect("delta_action", {h, c}, D.delta(hc), rhs.take());
            const Scalar lhs = D.eps(hc), rr = H.eps(h) * D.eps(c);
            if (lhs != rr) rep.fail("eps_action", {h, c}, basis_vec(0, lhs), basis_vec(0, rr));
        }
    }));
    return r;
}

CheckReport check_doi_compatibility(const DoiModule& M) {
    const DoiDatum& D = M.datum;
    const std::size_t na = D.A.dim(), nh = D.H.dim(), nc = D.C.dim(), n = M.dim;
    return check_each(na, [&](Index a, CheckReport& rep) {
        for (Index m = 0; m < n; ++m) {
            Acc rhs(n * nc);
            for (const auto& [k, x] : D.A.rho(a))
                for (const auto& [l, y] : M.rho(m))
                    rhs.add_outer(M.act(k / nh, l / nc), D.C.act(k % nh, l % nc), nc, x * y);
            rep.expect("doi_compat", {a, m}, M.rho(M.act(a, m)), rhs.take());
        }
    });
}

CheckReport check_doi_module(const DoiModule& M) {
    CheckReport r = check_hom_module(M.as_module());
    r.merge(check_hom_comodule(M.as_comodule()));
    r.merge(check_doi_compatibility(M));
    return r;
}

CheckReport check_doi_morphism(const LinearMap& f, const DoiModule& M, const DoiModule& N) {
    if (M.datum.fingerprint() != N.datum.fingerprint()) throw Error("DatumMismatch", "modules over different data");
    if (f.dom() != M.dim || f.cod() != N.dim) throw Error("DimensionMismatch", "morphism");
    const std::size_t na = M.datum.A.dim(), nc = M.datum.C.dim();
    const LinearMap fc = f.kron(LinearMap::identity(nc));
    return check_each(M.dim, [&](Index m, CheckReport& rep) {
        for (Index a = 0; a < na; ++a) rep.expect("A_linear", {a, m}, f.apply(M.act(a, m)), N.act(basis_vec(a), f.col(m)));
        rep.expect("C_colinear", {m}, N.rho(f.col(m)), fc.apply(M.rho(m)));
        rep.expect("mu_natural", {m}, N.mu.apply(f.col(m)), f.apply(M.mu.col(m)));
    });
}

HomModule regular_module(const HomAlgebra& A, Side side) { return {A, A.mul, A.alpha, side}; }

HomModule trivial_module(const HomBialgebra& B, const LinearMap& mu, Side side) {
    const std::size_t na = B.dim(), n = mu.dom();
    LinearMap act(na * n, n);
    for (Index a = 0; a < na; ++a)
        for (Index m = 0; m < n; ++m)
            act.set_col(side == Side::Left ? static_cast<Index>(a * n + m) : static_cast<Index>(m * na + a),
                        scaled(mu.col(m), B.co.eps(a)));
    return {B.alg, act, mu, side};
}

HomComodule regular_comodule(const HomCoalgebra& C, Side side) { return {C, C.comul, C.gamma, side}; }

HomComodule trivial_comodule(const HomBialgebra& B, const LinearMap& mu, Side side) {
    const std::size_t nc = B.dim(), n = mu.dom();
    const LinearMap mi = mu.inverse();
    LinearMap co(n, n * nc);
    for (Index m = 0; m < n; ++m)
        co.set_col(m, side == Side::Right ? outer(mi.col(m), B.alg.unit, nc) : outer(B.alg.unit, mi.col(m), n));
    return {B.co, co, mu, side};
}

ComoduleAlgebra regular_comodule_algebra(const HomHopfAlgebra& H) {
    return {H.bi, H.alg(), regular_comodule(H.co())};
}

ModuleCoalgebra regular_module_coalgebra(const HomHopfAlgebra& H) { return {H.bi, H.co(), regular_module(H.alg())}; }

ComoduleAlgebra trivial_comodule_algebra(const HomHopfAlgebra& H) {
    const HomHopfAlgebra k = ground_hopf();
    return {H.bi, k.alg(), trivial_comodule(H.bi, LinearMap::identity(1))};
}

ModuleCoalgebra trivial_module_coalgebra(const HomHopfAlgebra& H) {
    const HomHopfAlgebra k = ground_hopf();
    return {H.bi, k.co(), trivial_module(H.bi, LinearMap::identity(1))};
}

DoiModule canonical_doi_module(const DoiDatum& D) {
    const HomAlgebra& A = D.A.algebra;
    const HomCoalgebra& C = D.C.coalgebra;
    const std::size_t na = A.dim, nc = C.dim, nh = D.H.dim(), n = na * nc;
    LinearMap act(na * n, n), co(n, n * nc);
    for (Index a = 0; a < na; ++a) {
        const Vec ai = A.al(basis_vec(a), -1);
        for (Index b = 0; b < na; ++b)
            for (Index c = 0; c < nc; ++c)
                act.set_col(static_cast<Index>(a * n + b * nc + c), outer(A.m(ai, basis_vec(b)), C.gamma.col(c), nc));
    }
    for (Index b = 0; b < na; ++b)
        for (Index c = 0; c < nc; ++c) {
            Acc acc(n * nc);
            for (const auto& [k, x] : D.A.rho(b))
                for (const auto& [l, y] : C.delta(c))
                    acc.add_outer(basis_vec(static_cast<Index>((k / nh) * nc + l / nc)), D.C.act(k % nh, l % nc), nc, x * y);
            co.set_col(static_cast<Index>(b * nc + c), acc.take());
        }
    return {D, act, co, A.alpha.kron(C.gamma)};
}

}  // namespace homcat
