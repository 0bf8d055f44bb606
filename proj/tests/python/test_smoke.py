from fractions import Fraction

import pytest

import rftorsion as rft

SPHERE3 = "rft-complex 1\ndims 1 0 0 1\n"
TWO = "rft-complex 1\ndims 1 1\nboundary 1\n2\n"


def test_betti():
    assert rft.betti(SPHERE3) == [1, 0, 0, 1]


def test_torsion_values():
    assert Fraction(rft.torsion(TWO)["torsion"]) == Fraction(1, 2)
    assert rft.model("point")["torsion"] == "1"
    assert Fraction(rft.model("sphere_simplicial", 2)["abs"]) == 1


def test_model_document_roundtrip():
    text = rft.model_document("sphere_simplicial", 2)
    assert rft.betti(text) == [1, 0, 1]
    assert rft.roundtrip(text) == text


def test_ses_verify():
    doc = (
        "rft-ses 1\n"
        "complex a\ndims 1 1\nboundary 1\n2\n"
        "complex b\ndims 2 2\nboundary 1\n2 0\n0 3\n"
        "complex d\ndims 1 1\nboundary 1\n3\n"
        "map i 0\n1\n0\nmap i 1\n1\n0\n"
        "map pi 0\n0 1\nmap pi 1\n0 1\n"
    )
    report = rft.ses_verify(doc)
    assert report["equal"]
    assert Fraction(report["torsion_b"]) == Fraction(1, 6)
    assert report["corrective"] == "1"


def test_symplectic_torsion():
    doc = (
        "rft-complex 1\ndims 1 2 1\n"
        "pairing 0\n1\n"
        "pairing 1\n0 1\n-1 0\n"
    )
    assert rft.symplectic_torsion(doc) == "1"


def test_errors():
    with pytest.raises(rft.DocumentSyntaxError):
        rft.torsion("dims 1\n")
    with pytest.raises(rft.DocumentSemanticError):
        rft.torsion("rft-complex 1\ndims 1 1 1\nboundary 1\n1\nboundary 2\n1\n")
    with pytest.raises(rft.UnknownModelError):
        rft.model("nosuch")


def test_verify_suite_small():
    results = rft.verify_suite(seed=7, cases=3)
    assert len(results) == 12
    assert all(r["passed"] for r in results)
