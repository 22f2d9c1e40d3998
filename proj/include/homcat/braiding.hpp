#pragma once

#include "homcat/doicat.hpp"

namespace homcat {

// Verdicts of the four braiding conditions.
struct BraidingFlags {
    bool linearity = false;       // c is A-linear
    bool colinearity = false;     // c is C-colinear
    bool hexagon_first = false;   // c_{M, N (x) P} splits
    bool hexagon_second = false;  // c_{M (x) N, P} splits
    bool all() const { return linearity && colinearity && hexagon_first && hexagon_second; }
};

// Q, R: C (x) C -> A (x) A, index c * dimC + d -> a * dimA + b.
struct BraidingData {
    MonoidalDoiDatum datum;
    LinearMap Q, R;
    BraidingFlags verified;
};

// R with R(u[1].g^-1(c1) (x) v[1].g^-1(d1)) (b(v[0]) (x) b(u[0])) = eps(c)eps(d) 1 (x) 1 for
// Q(c2 (x) d2) = u (x) v, and the mirrored identity. Solved as one linear system.
// Throws IntertwiningFails when (b (x) b)Q != Q(g (x) g), NotTwistedInvertible when inconsistent.
LinearMap twisted_conv_inverse(const MonoidalDoiDatum& G, const LinearMap& Q);
// Q with its inverse and the condition flags filled in.
BraidingData make_braiding(const MonoidalDoiDatum& G, LinearMap Q);

// c(m (x) n) = Q1(n[1] (x) m[1]).n[0] (x) Q2(n[1] (x) m[1]).m[0] : M (x) N -> N (x) M
LinearMap braid(const BraidingData& B, const DoiModule& M, const DoiModule& N);
// c^-1(n (x) m) = R1(n[1] (x) m[1]).m[0] (x) R2(n[1] (x) m[1]).n[0] : N (x) M -> M (x) N
LinearMap braid_inverse(const BraidingData& B, const DoiModule& M, const DoiModule& N);

// Axioms "linearity" {a, c, d}, "colinearity" {c, d}, "hexagon_first" and "hexagon_second" {c, d, e}.
CheckReport check_braiding_conditions(const BraidingData& B);
BraidingFlags flags_from(const CheckReport& r);

// A Doi morphism f: source -> target used for naturality checks.
struct NaturalityCase {
    LinearMap f;
    DoiModule source, target;
};

// Hexagons ("hexagon_first", "hexagon_second"), Yang-Baxter ("yang_baxter") on (M (x) N) (x) P,
// and naturality of c in each argument against the supplied morphisms ("natural_left", "natural_right").
// Witness = column index of the failing basis element.
CheckReport check_hexagons_on(const BraidingData& B, const DoiModule& M, const DoiModule& N, const DoiModule& P,
                              const std::vector<NaturalityCase>& morphisms = {});

// Order of the second legs in the product axioms: Standard is R1 (x) r1 (x) R2 r2,
// Swapped is R1 (x) r1 (x) r2 R2 (similarly for the forms).
enum class LegOrder { Standard, Swapped };

struct QTStructure {
    HomHopfAlgebra H;
    Vec R_elem, R_inverse;  // in H (x) H
};
// Inverse for the componentwise product of H (x) H. Throws NotInvertible.
QTStructure make_qt(const HomHopfAlgebra& H, Vec R);
// QT1..QT5
CheckReport check_quasitriangular(const QTStructure& S, LegOrder order = LegOrder::Standard);

struct CoQTForm {
    HomHopfAlgebra H;
    LinearMap sigma, sigma_inverse;  // H (x) H -> k
};
// Convolution inverse on H (x) H. Throws NotInvertible.
CoQTForm make_coqt(const HomHopfAlgebra& H, LinearMap sigma);
// BR1..BR5
CheckReport check_coquasitriangular(const CoQTForm& F, LegOrder order = LegOrder::Standard);

// (H, A = H via Delta, C = k) and (H, A = k, C = H via multiplication).
MonoidalDoiDatum ck_datum(const HomHopfAlgebra& H);
MonoidalDoiDatum ak_datum(const HomHopfAlgebra& H);

// R = Q(1 (x) 1)^-1 on a C = k datum; sigma = Q on an A = k datum. Throws WrongDatumShape.
QTStructure qt_from_braiding(const BraidingData& B);
CoQTForm coqt_from_braiding(const BraidingData& B);

// Q(h (x) k) = eps(k) 1 (x) h on the datum from yd_datum(H).
LinearMap yd_braiding_map(const MonoidalDoiDatum& G);

}  // namespace homcat
