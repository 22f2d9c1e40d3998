#pragma once
// Shared fixture builders and converters for the test binaries.

#include "classical_oracle.hpp"
#include "homcat/homalg.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace fx {

using namespace homcat;

inline HomHopfAlgebra qc2() { return cyclic_group_algebra(2); }
inline HomHopfAlgebra h4() { return sweedler(); }
// QC4 deformed by g -> g^3
inline HomHopfAlgebra qc4t() {
    LinearMap aut(4, 4);
    for (Index i = 0; i < 4; ++i) aut.set_col(i, basis_vec((3 * i) % 4));
    return twist_classical(cyclic_group_algebra(4), aut);
}
// H4 deformed by x -> -x, gx -> -gx
inline HomHopfAlgebra h4m() { return twist_classical(sweedler(), LinearMap::diagonal({1, 1, -1, -1})); }
// H4 deformed by x -> 2x, gx -> 2gx; alpha is not an involution
inline HomHopfAlgebra h4t() { return twist_classical(sweedler(), LinearMap::diagonal({1, 1, 2, 2})); }

inline std::vector<Index> support(const Vec& v) {
    std::vector<Index> s;
    for (const auto& e : v) s.push_back(e.first);
    return s;
}

inline oracle::ClassicalHopf to_classical(const HomHopfAlgebra& H) {
    oracle::ClassicalHopf c;
    const std::size_t n = c.n = H.dim();
    c.m.assign(n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n, 0)));
    c.d.assign(n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n, 0)));
    c.unit.assign(n, 0);
    c.eps.assign(n, 0);
    c.s.assign(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, x] : H.alg().mul.col(static_cast<Index>(i * n + j))) c.m[i][j][k] = x.rational();
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [ij, x] : H.co().comul.col(static_cast<Index>(k))) c.d[k][ij / n][ij % n] = x.rational();
        c.eps[k] = H.co().eps(static_cast<Index>(k)).rational();
        for (const auto& [j, x] : H.S.col(static_cast<Index>(k))) c.s[k][j] = x.rational();
    }
    for (const auto& [i, x] : H.alg().unit) c.unit[i] = x.rational();
    return c;
}

// Library axiom name -> classical axiom group ("" for alpha-only axioms).
inline std::string classical_group(const std::string& axiom) {
    if (axiom == "hom_assoc") return "assoc";
    if (axiom == "unit_left" || axiom == "unit_right") return "unit";
    if (axiom == "hom_coassoc") return "coassoc";
    if (axiom == "counit_left" || axiom == "counit_right") return "counit";
    if (axiom == "antipode_left" || axiom == "antipode_right") return "antipode";
    if (axiom == "comul_mult" || axiom == "counit_mult" || axiom == "comul_unit" || axiom == "counit_unit") return axiom;
    return "";
}

// Corrupted structures; each returns the fixture and the axiom it must violate.
struct Negative {
    std::string name;
    HomHopfAlgebra H;
    std::string axiom;
    std::vector<Index> witness;  // first failing tuple for that axiom
};

inline HomHopfAlgebra with_mul(HomHopfAlgebra H, Index i, Index j, Vec v) {
    LinearMap mul = H.alg().mul;
    mul.set_col(static_cast<Index>(i * H.dim() + j), std::move(v));
    H.bi.alg = HomAlgebra(mul, H.alg().unit, H.alg().alpha);
    return H;
}

inline HomHopfAlgebra with_comul(HomHopfAlgebra H, Index c, Vec v) {
    LinearMap com = H.co().comul;
    com.set_col(c, std::move(v));
    H.bi.co = HomCoalgebra(com, H.co().counit, H.co().gamma);
    return H;
}

inline std::vector<Negative> negatives() {
    std::vector<Negative> out;
    {
        HomHopfAlgebra H = qc2();
        LinearMap sw(2, 2);
        sw.set_col(0, basis_vec(1));
        sw.set_col(1, basis_vec(0));
        H.bi.alg = HomAlgebra(H.alg().mul, H.alg().unit, sw);
        H.bi.co = HomCoalgebra(H.co().comul, H.co().counit, sw);
        out.push_back({"qc2_alpha_swap", H, "alpha_unit", {0}});
    }
    {
        HomHopfAlgebra H = qc2();
        H.bi.co = HomCoalgebra(H.co().comul, LinearMap::zero(2, 1), H.co().gamma);
        out.push_back({"qc2_zero_counit", H, "counit_left", {0}});
    }
    out.push_back({"qc2_delta_g_is_g_e", with_comul(qc2(), 1, basis_vec(1 * 2 + 0)), "counit_left", {1}});
    {
        HomHopfAlgebra H = h4();
        H.S = LinearMap::identity(4);
        H.S_inv.reset();
        out.push_back({"h4_antipode_id", H, "antipode_left", {2}});
    }
    {
        HomHopfAlgebra H = h4();
        LinearMap S = H.S;
        S.set_col(2, basis_vec(3, 1));  // S(x) = gx instead of -gx
        H.S = S;
        H.S_inv.reset();
        out.push_back({"h4_bad_antipode", H, "antipode_left", {2}});
    }
    // Delta(x) = x (x) 1 + 1 (x) x
    out.push_back({"h4_primitive_x", with_comul(h4(), 2, Vec{{0 * 4 + 2, 1}, {2 * 4 + 0, 1}}), "comul_mult", {1, 2}});
    // g x = -gx
    out.push_back({"h4_sign_gx", with_mul(h4(), 1, 2, basis_vec(3, -1)), "hom_assoc", {1, 1, 2}});
    {
        // twisted multiplication with the classical comultiplication
        HomHopfAlgebra H = h4t();
        H.bi.co = HomCoalgebra(sweedler().co().comul, H.co().counit, H.co().gamma);
        out.push_back({"h4t_untwisted_comul", H, "hom_coassoc", {2}});
    }
    {
        // g -> g^3 as structure map on the classical QC4 product
        HomHopfAlgebra H = cyclic_group_algebra(4);
        LinearMap aut(4, 4);
        for (Index i = 0; i < 4; ++i) aut.set_col(i, basis_vec((3 * i) % 4));
        H.bi.alg = HomAlgebra(H.alg().mul, H.alg().unit, aut);
        H.bi.co = HomCoalgebra(H.co().comul, H.co().counit, aut);
        out.push_back({"qc4_untwisted_mul", H, "unit_right", {1}});
    }
    return out;
}

}  // namespace fx
