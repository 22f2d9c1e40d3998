import os
import pathlib
from fractions import Fraction

import pytest

import homcat

FIXTURES = pathlib.Path(os.environ.get("HOMCAT_FIXTURES", pathlib.Path(__file__).resolve().parents[2] / "fixtures"))


def test_sweedler_axioms():
    H = homcat.sweedler()
    assert H.dim == 4
    assert homcat.check_hom_hopf(H).passed


def test_bad_antipode_has_witness():
    H = homcat.sweedler().with_antipode(homcat.LinearMap.identity(4))
    r = homcat.check_antipode(H)
    assert not r.passed
    assert r.failures[0].witness


def test_exact_fractions():
    f = homcat.LinearMap([[Fraction(1, 3), 0], [2, "5/7"]])
    rows = f.rows()
    assert rows[0][0] == Fraction(1, 3)
    assert rows[1][1] == Fraction(5, 7)
    assert (f @ f.inverse()).is_identity()
    with pytest.raises(TypeError):
        homcat.LinearMap([[0.5]])


def test_twist_and_double():
    H = homcat.twist_classical(homcat.sweedler(), homcat.LinearMap([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]))
    assert homcat.check_hom_hopf(H).passed
    D = homcat.drinfeld_double(homcat.cyclic_group_algebra(2))
    assert D.hopf.dim == 4
    assert D.qt_report.passed


def test_yd_braiding():
    G = homcat.yd_datum(homcat.sweedler())
    assert G.dims == (16, 4, 4)
    assert homcat.check_monoidal_datum(G).passed
    B = homcat.make_braiding(G, homcat.yd_braiding_map(G))
    assert B.verified.all()
    M = homcat.canonical_doi_module(G)
    c = homcat.braid(B, M, M)
    assert (homcat.braid_inverse(B, M, M) @ c).is_identity()


def test_not_invertible_raises():
    with pytest.raises(ValueError, match="SingularMap"):
        homcat.LinearMap([[1, 1], [1, 1]]).inverse()


def test_documents():
    d = homcat.load_document(str(FIXTURES / "h4.json"))
    assert homcat.check_hom_hopf(d["hopf"]).passed
    text = homcat.hopf_document(d["hopf"])
    again = homcat.parse_document(text)
    assert again["hopf"].alg.mul == d["hopf"].alg.mul
    with pytest.raises(ValueError, match="InputError"):
        homcat.load_document(str(FIXTURES / "missing.json"))
