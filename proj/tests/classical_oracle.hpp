#pragma once
// Classical (alpha = id) Hopf algebra axioms on dense structure constants.
// Independent of the library's sparse evaluation code; used for the
// classical-limit comparison.

#include <gmpxx.h>

#include <set>
#include <string>
#include <vector>

namespace oracle {

struct ClassicalHopf {
    std::size_t n = 0;
    std::vector<std::vector<std::vector<mpq_class>>> m;  // m[i][j][k]: coefficient of e_k in e_i e_j
    std::vector<mpq_class> unit;
    std::vector<std::vector<std::vector<mpq_class>>> d;  // d[c][i][j]: coefficient of e_i (x) e_j in Delta(e_c)
    std::vector<mpq_class> eps;
    std::vector<std::vector<mpq_class>> s;  // s[i][j]: coefficient of e_j in S(e_i)
};

inline std::set<std::string> classical_failures(const ClassicalHopf& h) {
    const std::size_t n = h.n;
    std::set<std::string> bad;
    using V = std::vector<mpq_class>;
    auto mulv = [&](const V& a, const V& b) {
        V r(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a[i] != 0 && b[j] != 0)
                    for (std::size_t k = 0; k < n; ++k) r[k] += a[i] * b[j] * h.m[i][j][k];
        return r;
    };
    auto e = [&](std::size_t i) {
        V v(n, 0);
        v[i] = 1;
        return v;
    };
    for (std::size_t a = 0; a < n; ++a) {
        if (mulv(e(a), h.unit) != e(a) || mulv(h.unit, e(a)) != e(a)) bad.insert("unit");
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mulv(mulv(e(a), e(b)), e(c)) != mulv(e(a), mulv(e(b), e(c)))) bad.insert("assoc");
    }
    for (std::size_t c = 0; c < n; ++c) {
        // (Delta (x) id) Delta = (id (x) Delta) Delta, as n^3 arrays
        std::vector<mpq_class> l(n * n * n, 0), r(n * n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (h.d[c][i][j] == 0) continue;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        l[(p * n + q) * n + j] += h.d[c][i][j] * h.d[i][p][q];
                        r[(i * n + p) * n + q] += h.d[c][i][j] * h.d[j][p][q];
                    }
            }
        if (l != r) bad.insert("coassoc");
        V cl(n, 0), cr(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cl[j] += h.eps[i] * h.d[c][i][j];
                cr[i] += h.eps[j] * h.d[c][i][j];
            }
        if (cl != e(c) || cr != e(c)) bad.insert("counit");
        V sl(n, 0), sr(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (h.d[c][i][j] == 0) continue;
                V t1 = mulv(h.s[i], e(j)), t2 = mulv(e(i), h.s[j]);
                for (std::size_t k = 0; k < n; ++k) {
                    sl[k] += h.d[c][i][j] * t1[k];
                    sr[k] += h.d[c][i][j] * t2[k];
                }
            }
        V target(n, 0);
        for (std::size_t k = 0; k < n; ++k) target[k] = h.eps[c] * h.unit[k];
        if (sl != target || sr != target) bad.insert("antipode");
    }
    // Delta(ab) = Delta(a) Delta(b), eps(ab) = eps(a) eps(b)
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<mpq_class> l(n * n, 0), r(n * n, 0);
            mpq_class el = 0;
            for (std::size_t k = 0; k < n; ++k) {
                el += h.m[a][b][k] * h.eps[k];
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) l[i * n + j] += h.m[a][b][k] * h.d[k][i][j];
            }
            for (std::size_t i1 = 0; i1 < n; ++i1)
                for (std::size_t j1 = 0; j1 < n; ++j1) {
                    if (h.d[a][i1][j1] == 0) continue;
                    for (std::size_t i2 = 0; i2 < n; ++i2)
                        for (std::size_t j2 = 0; j2 < n; ++j2) {
                            if (h.d[b][i2][j2] == 0) continue;
                            V x = mulv(e(i1), e(i2)), y = mulv(e(j1), e(j2));
                            for (std::size_t p = 0; p < n; ++p)
                                for (std::size_t q = 0; q < n; ++q)
                                    r[p * n + q] += h.d[a][i1][j1] * h.d[b][i2][j2] * x[p] * y[q];
                        }
                }
            if (l != r) bad.insert("comul_mult");
            if (el != h.eps[a] * h.eps[b]) bad.insert("counit_mult");
        }
    std::vector<mpq_class> du(n * n, 0), uu(n * n, 0);
    mpq_class eu = 0;
    for (std::size_t c = 0; c < n; ++c) {
        eu += h.unit[c] * h.eps[c];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                du[i * n + j] += h.unit[c] * h.d[c][i][j];
                if (c == 0) uu[i * n + j] = h.unit[i] * h.unit[j];
            }
    }
    if (du != uu) bad.insert("comul_unit");
    if (eu != 1) bad.insert("counit_unit");
    return bad;
}

}  // namespace oracle
