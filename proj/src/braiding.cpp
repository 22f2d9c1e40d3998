#include "homcat/braiding.hpp"

namespace homcat {

namespace {

struct Dims {
    std::size_t na, nc, nh;
};

Dims dims_of(const MonoidalDoiDatum& G) { return {G.datum.A.dim(), G.datum.C.dim(), G.datum.H.dim()}; }

// Q applied to x (x) y
Vec q2(const LinearMap& Q, const Vec& x, const Vec& y, std::size_t nc) { return Q.apply(outer(x, y, nc)); }

bool intertwines(const MonoidalDoiDatum& G, const LinearMap& Q) {
    const LinearMap& b = G.datum.A.algebra.alpha;
    const LinearMap& g = G.datum.C.coalgebra.gamma;
    return b.kron(b) * Q == Q * g.kron(g);
}

void require_shape(const MonoidalDoiDatum& G, const LinearMap& Q) {
    const Dims d = dims_of(G);
    if (Q.dom() != d.nc * d.nc || Q.cod() != d.na * d.na) throw Error("DimensionMismatch", "Q must map C(x)C to A(x)A");
}

}  // namespace

LinearMap twisted_conv_inverse(const MonoidalDoiDatum& G, const LinearMap& Q) {
    require_shape(G, Q);
    if (!intertwines(G, Q)) throw Error("IntertwiningFails", "(beta (x) beta)Q != Q(gamma (x) gamma)");
    const DoiDatum& D = G.datum;
    const HomAlgebra& A = D.A.algebra;
    const HomCoalgebra& C = D.C.coalgebra;
    const auto [na, nc, nh] = dims_of(G);
    const std::size_t NA = na * na, unknowns = nc * nc * NA, block = nc * nc * NA;
    // row (w, c, d, o) at w * block + (c * nc + d) * NA + o; unknown R(xy)_{pq} at xy * NA + pq
    std::vector<Vec> rows(2 * block);
    std::vector<Vec> beta(na);
    for (Index a = 0; a < na; ++a) beta[a] = A.al(basis_vec(a));
    for (Index c = 0; c < nc; ++c)
        for (Index d = 0; d < nc; ++d) {
            const std::size_t base = (c * nc + d) * NA;
            for (const auto& [kc, x1] : C.delta(c))
                for (const auto& [kd, x2] : C.delta(d)) {
                    const Index c1 = static_cast<Index>(kc / nc), c2 = static_cast<Index>(kc % nc);
                    const Index d1 = static_cast<Index>(kd / nc), d2 = static_cast<Index>(kd % nc);
                    const Vec gc = C.al(basis_vec(c1), -1), gd = C.al(basis_vec(d1), -1);
                    const Index k2 = static_cast<Index>(c2 * nc + d2);
                    for (const auto& [uv, q] : Q.col(k2)) {
                        const Index u = static_cast<Index>(uv / na), v = static_cast<Index>(uv % na);
                        for (const auto& [ru, y1] : D.A.rho(u))
                            for (const auto& [rv, y2] : D.A.rho(v)) {
                                const Vec X = D.C.module.act(basis_vec(static_cast<Index>(ru % nh)), gc);
                                const Vec Y = D.C.module.act(basis_vec(static_cast<Index>(rv % nh)), gd);
                                const Vec& L1 = beta[rv / nh];
                                const Vec& L2 = beta[ru / nh];
                                const Scalar coef = x1 * x2 * q * y1 * y2;
                                for (const auto& [xx, cx] : X)
                                    for (const auto& [yy, cy] : Y)
                                        for (Index p = 0; p < na; ++p)
                                            for (const auto& [s, z1] : A.m(basis_vec(p), L1))
                                                for (Index r = 0; r < na; ++r)
                                                    for (const auto& [t, z2] : A.m(basis_vec(r), L2))
                                                        rows[base + s * na + t].emplace_back(
                                                            static_cast<Index>((xx * nc + yy) * NA + p * na + r),
                                                            coef * cx * cy * z1 * z2);
                            }
                    }
                    for (Index p = 0; p < na; ++p)
                        for (Index r = 0; r < na; ++r)
                            for (const auto& [rr, y1] : D.A.rho(r))
                                for (const auto& [rp, y2] : D.A.rho(p)) {
                                    const Vec X = D.C.module.act(basis_vec(static_cast<Index>(rr % nh)), gc);
                                    const Vec Y = D.C.module.act(basis_vec(static_cast<Index>(rp % nh)), gd);
                                    for (const auto& [st, z] : q2(Q, X, Y, nc)) {
                                        const Index s = static_cast<Index>(st / na), t = static_cast<Index>(st % na);
                                        for (const auto& [o1, w1] : A.m(basis_vec(s), beta[rr / nh]))
                                            for (const auto& [o2, w2] : A.m(basis_vec(t), beta[rp / nh]))
                                                rows[block + base + o1 * na + o2].emplace_back(
                                                    static_cast<Index>(k2 * NA + p * na + r), x1 * x2 * y1 * y2 * z * w1 * w2);
                                    }
                                }
                }
        }
    std::vector<Scalar> rhs(2 * block);
    const Vec one = outer(A.unit, A.unit, na);
    for (std::size_t w = 0; w < 2; ++w)
        for (Index c = 0; c < nc; ++c)
            for (Index d = 0; d < nc; ++d) {
                const Scalar ed = C.eps(c) * C.eps(d);
                for (const auto& [o, y] : one) rhs[w * block + (c * nc + d) * NA + o] = ed * y;
            }
    for (auto& r : rows) r = normalized(std::move(r));
    auto sol = solve(rows, rhs, unknowns);
    if (!sol) throw Error("NotTwistedInvertible", "twisted inverse equations are inconsistent");
    LinearMap R(nc * nc, NA);
    for (Index xy = 0; xy < nc * nc; ++xy) {
        Vec col;
        for (Index pq = 0; pq < NA; ++pq)
            if (!sol->x[xy * NA + pq].is_zero()) col.emplace_back(pq, sol->x[xy * NA + pq]);
        R.set_col(xy, std::move(col));
    }
    if (!intertwines(G, R)) throw Error("IntertwiningFails", "twisted inverse does not intertwine");
    return R;
}

BraidingData make_braiding(const MonoidalDoiDatum& G, LinearMap Q) {
    BraidingData B{G, Q, twisted_conv_inverse(G, Q), {}};
    B.verified = flags_from(check_braiding_conditions(B));
    return B;
}

namespace {

void require_over(const BraidingData& B, const DoiModule& M) {
    if (M.datum.fingerprint() != B.datum.datum.fingerprint()) throw Error("DatumMismatch", "module over another datum");
}

// sum over X[1] (x) Y[1] of T(X[1] (x) Y[1]) = u (x) v, emitting (u.first, v.second) into index first * n2 + second
LinearMap braid_like(const BraidingData& B, const LinearMap& T, const DoiModule& M, const DoiModule& N, bool inverse) {
    require_over(B, M);
    require_over(B, N);
    const std::size_t na = B.datum.datum.A.dim(), nc = B.datum.datum.C.dim();
    const std::size_t nm = M.dim, nn = N.dim, n = nm * nn;
    LinearMap out(n, n);
    // braid: M (x) N -> N (x) M; inverse: N (x) M -> M (x) N
    for (Index i = 0; i < nm; ++i)
        for (Index j = 0; j < nn; ++j) {
            Acc acc(n);
            for (const auto& [kn, x] : N.rho(j))
                for (const auto& [km, y] : M.rho(i)) {
                    const Index n0 = static_cast<Index>(kn / nc), n1 = static_cast<Index>(kn % nc);
                    const Index m0 = static_cast<Index>(km / nc), m1 = static_cast<Index>(km % nc);
                    for (const auto& [uv, q] : T.col(static_cast<Index>(n1 * nc + m1))) {
                        const Index u = static_cast<Index>(uv / na), v = static_cast<Index>(uv % na);
                        if (!inverse)
                            acc.add_outer(N.act(u, n0), M.act(v, m0), nm, x * y * q);
                        else
                            acc.add_outer(M.act(u, m0), N.act(v, n0), nn, x * y * q);
                    }
                }
            out.set_col(static_cast<Index>(inverse ? j * nm + i : i * nn + j), acc.take());
        }
    return out;
}

}  // namespace

LinearMap braid(const BraidingData& B, const DoiModule& M, const DoiModule& N) {
    return braid_like(B, B.Q, M, N, false);
}

LinearMap braid_inverse(const BraidingData& B, const DoiModule& M, const DoiModule& N) {
    return braid_like(B, B.R, M, N, true);
}

namespace {

struct Ctx {
    const DoiDatum& D;
    const HomAlgebra& A;
    const HomCoalgebra& C;
    const HomCoalgebra& Ad;
    const HomAlgebra& Cm;
    std::size_t na, nc, nh;
    explicit Ctx(const MonoidalDoiDatum& G)
        : D(G.datum), A(G.datum.A.algebra), C(G.datum.C.coalgebra), Ad(G.a_bialgebra.co), Cm(G.c_bialgebra.alg),
          na(G.datum.A.dim()), nc(G.datum.C.dim()), nh(G.datum.H.dim()) {}
    Vec act(const Vec& h, const Vec& c) const { return D.C.module.act(h, c); }
    Vec act(Index h, Index c) const { return D.C.act(h, c); }
    Vec beta(const Vec& a, int k = 1) const { return A.al(a, k); }
    Vec gam(Index c, int k = 1) const { return C.al(basis_vec(c), k); }
};

}  // namespace

CheckReport check_braiding_conditions(const BraidingData& B) {
    require_shape(B.datum, B.Q);
    const Ctx x(B.datum);
    const LinearMap& Q = B.Q;
    const std::size_t na = x.na, nc = x.nc, nh = x.nh;
    CheckReport r;
    r.merge(check_each(na, [&](Index a, CheckReport& rep) {
        for (Index c = 0; c < nc; ++c)
            for (Index d = 0; d < nc; ++d) {
                Acc lhs(na * na), rhs(na * na);
                for (const auto& [k, w0] : x.Ad.delta(a)) {
                    const Index a1 = static_cast<Index>(k / na), a2 = static_cast<Index>(k % na);
                    for (const auto& [p, y] : x.D.A.rho(a2))
                        for (const auto& [q, z] : x.D.A.rho(a1)) {
                            const Vec X = x.act(static_cast<Index>(p % nh), c), Y = x.act(static_cast<Index>(q % nh), d);
                            const Vec bp = x.beta(basis_vec(static_cast<Index>(p / nh)));
                            const Vec bq = x.beta(basis_vec(static_cast<Index>(q / nh)));
                            for (const auto& [st, w] : q2(Q, X, Y, nc))
                                lhs.add_outer(x.A.m(basis_vec(static_cast<Index>(st / na)), bp),
                                              x.A.m(basis_vec(static_cast<Index>(st % na)), bq), na, w0 * y * z * w);
                        }
                }
                const Vec Qg = q2(Q, x.gam(c), x.gam(d), nc);
                for (const auto& [k, w0] : x.Ad.delta(a))
                    for (const auto& [st, w] : Qg)
                        rhs.add_outer(x.A.m(basis_vec(static_cast<Index>(k / na)), basis_vec(static_cast<Index>(st / na))),
                                      x.A.m(basis_vec(static_cast<Index>(k % na)), basis_vec(static_cast<Index>(st % na))),
                                      na, w0 * w);
                rep.expect("linearity", {a, c, d}, lhs.take(), rhs.take());
            }
    }));
    r.merge(check_each(nc, [&](Index c, CheckReport& rep) {
        for (Index d = 0; d < nc; ++d) {
            Acc lhs(na * na * nc), rhs(na * na * nc);
            for (const auto& [kc, x1] : x.C.delta(c))
                for (const auto& [kd, x2] : x.C.delta(d)) {
                    const Index c1 = static_cast<Index>(kc / nc), c2 = static_cast<Index>(kc % nc);
                    const Index d1 = static_cast<Index>(kd / nc), d2 = static_cast<Index>(kd % nc);
                    for (const auto& [uv, q] : q2(Q, x.gam(d2), x.gam(c2), nc))
                        for (const auto& [pu, y1] : x.D.A.rho(static_cast<Index>(uv / na)))
                            for (const auto& [pv, y2] : x.D.A.rho(static_cast<Index>(uv % na))) {
                                const Vec k = x.Cm.m(x.act(static_cast<Index>(pu % nh), d1), x.act(static_cast<Index>(pv % nh), c1));
                                lhs.add_outer(basis_vec(static_cast<Index>((pu / nh) * na + pv / nh)), k, nc, x1 * x2 * q * y1 * y2);
                            }
                    rhs.add_outer(Q.col(static_cast<Index>(d1 * nc + c1)), x.C.al(x.Cm.m(c2, d2)), nc, x1 * x2);
                }
            rep.expect("colinearity", {c, d}, lhs.take(), rhs.take());
        }
    }));
    const std::size_t n3 = na * na * na;
    r.merge(check_each(nc, [&](Index c, CheckReport& rep) {
        for (Index d = 0; d < nc; ++d)
            for (Index e = 0; e < nc; ++e) {
                Acc lhs(n3), rhs(n3);
                for (const auto& [st, w] : q2(Q, x.Cm.m(basis_vec(e), x.gam(c, -1)), x.gam(d), nc))
                    lhs.add_outer(x.Ad.delta(static_cast<Index>(st / na)), basis_vec(static_cast<Index>(st % na)), na, w);
                for (const auto& [kd, x1] : x.C.delta(d)) {
                    const Index d1 = static_cast<Index>(kd / nc), d2 = static_cast<Index>(kd % nc);
                    for (const auto& [st, w] : q2(Q, x.gam(e, -1), basis_vec(d2), nc)) {
                        const Vec bs = x.beta(basis_vec(static_cast<Index>(st / na)));
                        for (const auto& [pt, y] : x.D.A.rho(static_cast<Index>(st % na))) {
                            const Vec X = x.act(x.D.H.alg().al(basis_vec(static_cast<Index>(pt % nh))), basis_vec(d1));
                            const Vec b2 = x.beta(basis_vec(static_cast<Index>(pt / nh)), 2);
                            for (const auto& [uv, z] : q2(Q, x.gam(c, -1), X, nc))
                                rhs.add_outer(outer(bs, basis_vec(static_cast<Index>(uv / na)), na),
                                              x.A.m(basis_vec(static_cast<Index>(uv % na)), b2), na, x1 * w * y * z);
                        }
                    }
                }
                rep.expect("hexagon_first", {c, d, e}, lhs.take(), rhs.take());
            }
    }));
    r.merge(check_each(nc, [&](Index c, CheckReport& rep) {
        for (Index d = 0; d < nc; ++d)
            for (Index e = 0; e < nc; ++e) {
                Acc lhs(n3), rhs(n3);
                for (const auto& [st, w] : q2(Q, x.gam(c), x.Cm.m(x.gam(d, -1), basis_vec(e)), nc))
                    lhs.add_outer(basis_vec(static_cast<Index>(st / na)), x.Ad.delta(static_cast<Index>(st % na)), na * na, w);
                for (const auto& [kc, x1] : x.C.delta(c)) {
                    const Index c1 = static_cast<Index>(kc / nc), c2 = static_cast<Index>(kc % nc);
                    for (const auto& [st, w] : q2(Q, basis_vec(c2), x.gam(e, -1), nc)) {
                        const Vec bt = x.beta(basis_vec(static_cast<Index>(st % na)));
                        for (const auto& [ps, y] : x.D.A.rho(static_cast<Index>(st / na))) {
                            const Vec X = x.act(x.D.H.alg().al(basis_vec(static_cast<Index>(ps % nh))), basis_vec(c1));
                            const Vec b2 = x.beta(basis_vec(static_cast<Index>(ps / nh)), 2);
                            for (const auto& [uv, z] : q2(Q, X, x.gam(d, -1), nc))
                                rhs.add_outer(outer(x.A.m(basis_vec(static_cast<Index>(uv / na)), b2),
                                                    basis_vec(static_cast<Index>(uv % na)), na),
                                              bt, na, x1 * w * y * z);
                        }
                    }
                }
                rep.expect("hexagon_second", {c, d, e}, lhs.take(), rhs.take());
            }
    }));
    return r;
}

BraidingFlags flags_from(const CheckReport& r) {
    return {!r.failed("linearity"), !r.failed("colinearity"), !r.failed("hexagon_first"), !r.failed("hexagon_second")};
}

namespace {

void compare_columns(CheckReport& r, const std::string& axiom, const LinearMap& L, const LinearMap& R,
                     std::vector<Index> prefix = {}) {
    for (Index j = 0; j < L.dom(); ++j)
        if (L.col(j) != R.col(j)) {
            auto w = prefix;
            w.push_back(j);
            r.fail(axiom, std::move(w), L.col(j), R.col(j));
        }
}

LinearMap assoc_inv(const DoiModule& M, const DoiModule& N, const DoiModule& P) {
    return M.mu_inv.kron(LinearMap::identity(N.dim)).kron(P.mu);
}

LinearMap id(std::size_t n) { return LinearMap::identity(n); }

}  // namespace

CheckReport check_hexagons_on(const BraidingData& B, const DoiModule& M, const DoiModule& N, const DoiModule& P,
                              const std::vector<NaturalityCase>& morphisms) {
    const MonoidalDoiDatum& G = B.datum;
    const DoiModule NP = tensor_doi_unchecked(G, N, P), MN = tensor_doi_unchecked(G, M, N);
    const LinearMap cMN = braid(B, M, N), cMP = braid(B, M, P), cNP = braid(B, N, P);
    CheckReport r;
    {
        const LinearMap lhs = associator(N, P, M) * braid(B, M, NP) * associator(M, N, P);
        const LinearMap rhs = id(N.dim).kron(cMP) * associator(N, M, P) * cMN.kron(id(P.dim));
        compare_columns(r, "hexagon_first", lhs, rhs);
    }
    {
        const LinearMap lhs = assoc_inv(P, M, N) * braid(B, MN, P) * assoc_inv(M, N, P);
        const LinearMap rhs = cMP.kron(id(N.dim)) * assoc_inv(M, P, N) * id(M.dim).kron(cNP);
        compare_columns(r, "hexagon_second", lhs, rhs);
    }
    {
        // (M N) P -> (P N) M both ways
        const LinearMap lhs = cNP.kron(id(M.dim)) * assoc_inv(N, P, M) * id(N.dim).kron(cMP) * associator(N, M, P) *
                              cMN.kron(id(P.dim));
        const LinearMap rhs = assoc_inv(P, N, M) * id(P.dim).kron(cMN) * associator(P, M, N) * cMP.kron(id(N.dim)) *
                              assoc_inv(M, P, N) * id(M.dim).kron(cNP) * associator(M, N, P);
        compare_columns(r, "yang_baxter", lhs, rhs);
    }
    for (Index i = 0; i < morphisms.size(); ++i) {
        const NaturalityCase& f = morphisms[i];
        const LinearMap l1 = braid(B, f.target, N) * f.f.kron(id(N.dim));
        const LinearMap r1 = id(N.dim).kron(f.f) * braid(B, f.source, N);
        compare_columns(r, "natural_left", l1, r1, {i});
        const LinearMap l2 = braid(B, M, f.target) * id(M.dim).kron(f.f);
        const LinearMap r2 = f.f.kron(id(M.dim)) * braid(B, M, f.source);
        compare_columns(r, "natural_right", l2, r2, {i});
    }
    return r;
}

namespace {

// componentwise product on H (x) H
Vec mul2(const HomAlgebra& H, const Vec& x, const Vec& y) {
    const std::size_t n = H.dim;
    Acc acc(n * n);
    for (const auto& [k1, a] : x)
        for (const auto& [k2, b] : y)
            acc.add_outer(H.m(static_cast<Index>(k1 / n), static_cast<Index>(k2 / n)),
                          H.m(static_cast<Index>(k1 % n), static_cast<Index>(k2 % n)), n, a * b);
    return acc.take();
}

Vec element_inverse(const HomAlgebra& H, const Vec& R) {
    const std::size_t N = H.dim * H.dim;
    const Vec one = outer(H.unit, H.unit, H.dim);
    std::vector<Acc> left(N, Acc(N)), right(N, Acc(N));
    for (Index j = 0; j < N; ++j) {
        const Vec e = basis_vec(j);
        for (const auto& [o, v] : mul2(H, e, R)) left[o].add(j, v);
        for (const auto& [o, v] : mul2(H, R, e)) right[o].add(j, v);
    }
    std::vector<Vec> rows;
    std::vector<Scalar> rhs;
    for (Index o = 0; o < N; ++o) {
        rows.push_back(left[o].take());
        rows.push_back(right[o].take());
        rhs.push_back(coeff(one, o));
        rhs.push_back(coeff(one, o));
    }
    auto sol = solve(rows, rhs, N);
    if (!sol) throw Error("NotInvertible", "element of H (x) H has no inverse");
    Vec x;
    for (Index j = 0; j < N; ++j)
        if (!sol->x[j].is_zero()) x.emplace_back(j, sol->x[j]);
    return x;
}

}  // namespace

QTStructure make_qt(const HomHopfAlgebra& H, Vec R) {
    Vec inv = element_inverse(H.alg(), R);
    return {H, std::move(R), std::move(inv)};
}

CheckReport check_quasitriangular(const QTStructure& S, LegOrder order) {
    const HomAlgebra& A = S.H.alg();
    const HomCoalgebra& C = S.H.co();
    const std::size_t n = A.dim;
    const bool std_order = order == LegOrder::Standard;
    const Vec& R = S.R_elem;
    CheckReport r;
    {
        Acc lhs(n * n * n), rhs(n * n * n);
        for (const auto& [k, x] : R) lhs.add_outer(C.delta(static_cast<Index>(k / n)), basis_vec(static_cast<Index>(k % n)), n, x);
        for (const auto& [k, x] : R)
            for (const auto& [l, y] : R) {
                const Index a = static_cast<Index>(k / n), b = static_cast<Index>(k % n);
                const Index c = static_cast<Index>(l / n), d = static_cast<Index>(l % n);
                rhs.add_outer(basis_vec(static_cast<Index>(a * n + c)), std_order ? A.m(b, d) : A.m(d, b), n, x * y);
            }
        r.expect("QT1", {}, lhs.take(), rhs.take());
    }
    {
        Acc lhs(n * n * n), rhs(n * n * n);
        for (const auto& [k, x] : R) lhs.add_outer(basis_vec(static_cast<Index>(k / n)), C.delta(static_cast<Index>(k % n)), n * n, x);
        for (const auto& [k, x] : R)
            for (const auto& [l, y] : R) {
                const Index a = static_cast<Index>(k / n), b = static_cast<Index>(k % n);
                const Index c = static_cast<Index>(l / n), d = static_cast<Index>(l % n);
                rhs.add_outer(outer(std_order ? A.m(a, c) : A.m(c, a), basis_vec(d), n), basis_vec(b), n, x * y);
            }
        r.expect("QT2", {}, lhs.take(), rhs.take());
    }
    {
        Vec l, rr;
        for (const auto& [k, x] : R) {
            l = add(l, basis_vec(static_cast<Index>(k % n)), x * C.eps(static_cast<Index>(k / n)));
            rr = add(rr, basis_vec(static_cast<Index>(k / n)), x * C.eps(static_cast<Index>(k % n)));
        }
        r.expect("QT3", {0}, l, A.unit);
        r.expect("QT3", {1}, rr, A.unit);
    }
    const LinearMap tau = flip(n, n);
    for (Index h = 0; h < n; ++h)
        r.expect("QT4", {h}, mul2(A, tau.apply(C.delta(h)), R), mul2(A, R, C.delta(h)));
    r.expect("QT5", {}, A.alpha.kron(A.alpha).apply(R), R);
    return r;
}

CoQTForm make_coqt(const HomHopfAlgebra& H, LinearMap sigma) {
    const HomHopfAlgebra HH = tensor_hopf(H, H);
    LinearMap inv = convolution_invert(sigma, ground_hopf().alg(), HH.co());
    return {H, std::move(sigma), std::move(inv)};
}

CheckReport check_coquasitriangular(const CoQTForm& F, LegOrder order) {
    const HomAlgebra& A = F.H.alg();
    const HomCoalgebra& C = F.H.co();
    const std::size_t n = A.dim;
    const bool std_order = order == LegOrder::Standard;
    auto s = [&](const Vec& u, const Vec& v) { return coeff(F.sigma.apply(outer(u, v, n)), 0); };
    auto split = [&](Index h) {
        std::vector<std::tuple<Vec, Vec, Scalar>> out;
        for (const auto& [k, x] : C.delta(h))
            out.emplace_back(basis_vec(static_cast<Index>(k / n)), basis_vec(static_cast<Index>(k % n)), x);
        return out;
    };
    CheckReport r;
    for (Index h = 0; h < n; ++h)
        for (Index g = 0; g < n; ++g)
            for (Index l = 0; l < n; ++l) {
                const Vec eh = basis_vec(h), eg = basis_vec(g), el = basis_vec(l);
                Scalar rhs = 0;
                for (const auto& [l1, l2, x] : split(l)) rhs += x * (std_order ? s(eh, l2) * s(eg, l1) : s(eh, l1) * s(eg, l2));
                const Scalar lhs = s(A.m(h, g), el);
                if (lhs != rhs) r.fail("BR1", {h, g, l}, {{0, lhs}}, {{0, rhs}});
                Scalar rhs2 = 0;
                for (const auto& [h1, h2, x] : split(h)) rhs2 += x * (std_order ? s(h1, eg) * s(h2, el) : s(h1, el) * s(h2, eg));
                const Scalar lhs2 = s(eh, A.m(g, l));
                if (lhs2 != rhs2) r.fail("BR2", {h, g, l}, {{0, lhs2}}, {{0, rhs2}});
            }
    for (Index h = 0; h < n; ++h) {
        for (Index g = 0; g < n; ++g) {
            Vec lhs, rhs;
            for (const auto& [h1, h2, x] : split(h))
                for (const auto& [g1, g2, y] : split(g)) {
                    lhs = add(lhs, A.m(g2, h2), x * y * s(h1, g1));
                    rhs = add(rhs, A.m(h1, g1), x * y * s(h2, g2));
                }
            r.expect("BR3", {h, g}, lhs, rhs);
            const Scalar a = s(A.al(basis_vec(h)), A.al(basis_vec(g))), b = s(basis_vec(h), basis_vec(g));
            if (a != b) r.fail("BR5", {h, g}, {{0, a}}, {{0, b}});
        }
        const Vec e = {{0, C.eps(h)}};
        const Vec l = normalized({{0, s(A.unit, basis_vec(h))}}), rr = normalized({{0, s(basis_vec(h), A.unit)}});
        r.expect("BR4", {h, 0}, l, normalized(e));
        r.expect("BR4", {h, 1}, rr, normalized(e));
    }
    return r;
}

MonoidalDoiDatum ck_datum(const HomHopfAlgebra& H) {
    return {DoiDatum{H, regular_comodule_algebra(H), trivial_module_coalgebra(H)}, H.bi, ground_hopf().bi};
}

MonoidalDoiDatum ak_datum(const HomHopfAlgebra& H) {
    return {DoiDatum{H, trivial_comodule_algebra(H), regular_module_coalgebra(H)}, ground_hopf().bi, H.bi};
}

namespace {

bool same_bialgebra(const HomBialgebra& a, const HomBialgebra& b) {
    return a.alg.mul == b.alg.mul && a.alg.unit == b.alg.unit && a.alg.alpha == b.alg.alpha && a.co.comul == b.co.comul &&
           a.co.counit == b.co.counit;
}

}  // namespace

QTStructure qt_from_braiding(const BraidingData& B) {
    const MonoidalDoiDatum& G = B.datum;
    if (G.datum.C.dim() != 1 || !same_bialgebra(G.a_bialgebra, G.datum.H.bi))
        throw Error("WrongDatumShape", "expected C = k and A = H");
    const Vec& Rinv = B.Q.col(0);
    return make_qt(G.datum.H, element_inverse(G.datum.H.alg(), Rinv));
}

CoQTForm coqt_from_braiding(const BraidingData& B) {
    const MonoidalDoiDatum& G = B.datum;
    if (G.datum.A.dim() != 1 || !same_bialgebra(G.c_bialgebra, G.datum.H.bi))
        throw Error("WrongDatumShape", "expected A = k and C = H");
    return make_coqt(G.datum.H, B.Q);
}

LinearMap yd_braiding_map(const MonoidalDoiDatum& G) {
    const std::size_t n = G.datum.A.dim();
    if (G.datum.C.dim() != n) throw Error("WrongDatumShape", "A and C must share a carrier");
    const HomAlgebra& A = G.datum.A.algebra;
    const HomCoalgebra& C = G.datum.C.coalgebra;
    LinearMap Q(n * n, n * n);
    for (Index h = 0; h < n; ++h)
        for (Index k = 0; k < n; ++k)
            Q.set_col(static_cast<Index>(h * n + k), scaled(outer(A.unit, basis_vec(h), n), C.eps(k)));
    return Q;
}

}  // namespace homcat
