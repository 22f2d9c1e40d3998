"""Writes the hand-derived fixture documents in fixtures/.

Everything here comes from the textbook presentations of the algebras
(group algebras of cyclic groups, Sweedler's 4-dimensional algebra),
not from the library.
"""
import json
import pathlib
import sys

SCHEMA = "homcat/1"
OUT = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "fixtures")


def doc(**sections):
    d = {"schema_version": SCHEMA, "field": "Q"}
    d.update(sections)
    return d


def write(name, d):
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / name).write_text(json.dumps(d, indent=2, sort_keys=True) + "\n")


def s(x):
    return str(x)


def identity(n):
    return [[i, i, "1"] for i in range(n)]


def cyclic(n):
    return {
        "dim": n,
        "mul": [[i, j, (i + j) % n, "1"] for i in range(n) for j in range(n)],
        "unit": [[0, "1"]],
        "comul": [[i, i, i, "1"] for i in range(n)],
        "counit": [[i, "1"] for i in range(n)],
        "alpha": identity(n),
        "antipode": [[i, (n - i) % n, "1"] for i in range(n)],
    }


# Sweedler: basis 1, g, x, gx as g^s x^t at index s + 2t; g^2 = 1, x^2 = 0, xg = -gx.
def sw_mul(a, b):
    s1, t1 = a % 2, a // 2
    s2, t2 = b % 2, b // 2
    if t1 + t2 > 1:
        return None
    sign = -1 if (t1 and s2) else 1
    return (s1 + s2) % 2 + 2 * (t1 + t2), sign


def sweedler(antipode=None):
    mul = []
    for a in range(4):
        for b in range(4):
            r = sw_mul(a, b)
            if r:
                mul.append([a, b, r[0], s(r[1])])
    # Delta g = g g, Delta x = x 1 + g x, Delta gx = gx g + 1 gx
    comul = [[0, 0, 0, "1"], [1, 1, 1, "1"], [2, 2, 0, "1"], [2, 1, 2, "1"], [3, 3, 1, "1"], [3, 0, 3, "1"]]
    S = antipode or [[0, 0, "1"], [1, 1, "1"], [2, 3, "-1"], [3, 2, "1"]]
    return {
        "dim": 4,
        "mul": mul,
        "unit": [[0, "1"]],
        "comul": comul,
        "counit": [[0, "1"], [1, "1"]],
        "alpha": identity(4),
        "antipode": S,
    }


def ground_algebra_parts():
    return {"dim": 1, "mul": [[0, 0, 0, "1"]], "unit": [[0, "1"]], "comul": [[0, 0, 0, "1"]],
            "counit": [[0, "1"]], "alpha": [[0, 0, "1"]]}


def main():
    write("c2.json", doc(description="group algebra of C2", hopf=cyclic(2)))
    write("c4_classical.json", doc(description="group algebra of C4", hopf=cyclic(4)))
    write("h4.json", doc(description="Sweedler's 4-dimensional Hopf algebra", hopf=sweedler()))
    write("h4_bad_antipode.json",
          doc(description="Sweedler's algebra with the identity as antipode", hopf=sweedler(identity(4))))

    # Yetter-Drinfeld candidates over H4: k with trivial structure, and H4 with
    # left multiplication and trivial coaction.
    h4 = sweedler()
    triv = {"dim": 1, "action": [[0, 0, 0, "1"], [1, 0, 0, "1"]], "coaction": [[0, 0, 0, "1"]]}
    reg = {"dim": 4,
           "action": [[a, b, r[0], s(r[1])] for a in range(4) for b in range(4) for r in [sw_mul(a, b)] if r],
           "coaction": [[m, m, 0, "1"] for m in range(4)]}
    write("h4_yd_modules.json", doc(description="YD candidates over H4", hopf=h4, doi_module=[triv, reg]))

    # Closed-form braiding map on the YD datum of H4: Q(h (x) k) = eps(k) 1 (x) h.
    eps = [1, 1, 0, 0]
    q = [[h, k, 0, h, "1"] for h in range(4) for k in range(4) if eps[k]]
    write("yd_h4_q.json", doc(description="Q(h (x) k) = eps(k) 1 (x) h", q_map={"dim_a": 4, "dim_c": 4, "q": q}))
    qp = q + [[2, 2, 2, 2, "1"]]
    write("yd_h4_q_perturbed.json", doc(description="perturbed braiding map", q_map={"dim_a": 4, "dim_c": 4, "q": qp}))

    # A = k, C = QC2 by multiplication, and the form sigma(g^i, g^j) = (-1)^(ij).
    c2 = cyclic(2)
    a_k = dict(ground_algebra_parts(), coaction=[[0, 0, 0, "1"]])
    c_c2 = {"dim": 2, "comul": c2["comul"], "counit": c2["counit"], "alpha": identity(2), "mul": c2["mul"],
            "unit": c2["unit"], "action": [[h, c, (h + c) % 2, "1"] for h in range(2) for c in range(2)]}
    sigma = [[i, j, 0, 0, "-1" if i * j else "1"] for i in range(2) for j in range(2)]
    write("ak_c2.json", doc(description="A = k datum over QC2 with sigma(g, g) = -1", hopf=c2,
                            comodule_algebra=a_k, module_coalgebra=c_c2,
                            q_map={"dim_a": 1, "dim_c": 2, "q": sigma}))
    bad = [[i, j, 0, 0, "2" if i * j else "1"] for i in range(2) for j in range(2)]
    write("ak_c2_sigma_bad.json", doc(description="sigma(g, g) = 2", q_map={"dim_a": 1, "dim_c": 2, "q": bad}))

    # Datum (QC2, QC2 via Delta, QC2 via multiplication) with A as a Doi module,
    # and the morphism (id, id, eps) onto (QC2, QC2, k).
    a_c2 = {"dim": 2, "mul": c2["mul"], "unit": c2["unit"], "alpha": identity(2),
            "coaction": [[i, i, i, "1"] for i in range(2)]}
    c_reg = {k: v for k, v in c_c2.items() if k not in ("mul", "unit")}
    regular = {"dim": 2, "action": c2["mul"], "coaction": [[i, i, i, "1"] for i in range(2)]}
    c_k = {"dim": 1, "comul": [[0, 0, 0, "1"]], "counit": [[0, "1"]], "alpha": [[0, 0, "1"]],
           "action": [[h, 0, 0, "1"] for h in range(2)]}
    target_module = {"dim": 2, "action": c2["mul"], "coaction": [[i, i, 0, "1"] for i in range(2)]}
    target = {"hopf": c2, "comodule_algebra": a_c2, "module_coalgebra": c_k, "doi_module": target_module}
    write("c2_morphism.json", doc(description="counit morphism (id, id, eps) out of (QC2, QC2, QC2)", hopf=c2,
                                  comodule_algebra=a_c2, module_coalgebra=c_reg, doi_module=regular,
                                  morphism={"phi_H": identity(2), "psi_A": identity(2),
                                            "phi_C": [[i, 0, "1"] for i in range(2)], "target": target}))


if __name__ == "__main__":
    main()
