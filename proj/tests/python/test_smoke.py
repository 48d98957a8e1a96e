import cmath
import math
from fractions import Fraction

import pytest

import qpsi


def test_mu_alpha_zero_is_constant():
    q = 0.25
    v = qpsi.mu(0.3 + 0.1j, 0.2, alpha=0, q=q)
    assert abs(v - (-1j) * q ** (-1 / 8)) < 1e-13


def test_mu_representations_agree():
    args = dict(u=0.31 + 0.05j, v=0.17 - 0.04j, alpha=0.7 + 0.2j, tau=0.13 + 0.28j)
    ref = qpsi.mu(repr="DEF", **args)
    for r in ("PSI12", "PSI22", "PSI02", "PSI48"):
        assert abs(qpsi.mu(repr=r, **args) - ref) <= 1e-10 * abs(ref)


def test_alpha_one_is_zwegers():
    u, v, q = 0.21 + 0.03j, 0.4 - 0.02j, 0.3 * cmath.exp(0.7j)
    assert abs(qpsi.mu(u, v, 1, q=q) - qpsi.zwegers_mu(u, v, q=q)) < 1e-11


def test_ramanujan_1psi1():
    q, a, b, x = 0.3, 1.7, 0.2, 0.6
    prod = lambda *z: math.prod(qpsi.pochhammer(t, q=q) for t in z)
    rhs = prod(a * x, q / (a * x), q, b / a) / prod(x, b / (a * x), b, q / a)
    assert abs(qpsi.psi([a], [b], x, q=q) - rhs) < 1e-12 * abs(rhs)


def test_nome_errors():
    with pytest.raises(qpsi.QpsiError):
        qpsi.theta(0.5)
    with pytest.raises(qpsi.DomainError):
        qpsi.psi([0.5], [0.2], 1.5, q=0.3)


def test_expand_exact():
    assert qpsi.expand("order3.f", 4) == [(0, 1), (1, 1), (2, -2), (3, 3)]
    e = qpsi.expand("order2.A", 4)
    assert e == [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(2)), (Fraction(3), Fraction(3))]
    with pytest.raises(qpsi.UnknownEntry):
        qpsi.expand("order3.nope")


def test_suite_subset_and_determinism():
    ids = ["RAMANUJAN_1PSI1", "MU_CQH", "THM11_1"]
    a = qpsi.run_suite(ids, seed=3, draws=10)
    assert [r["id"] for r in a] == ids
    assert all(r["status"] == "pass" for r in a)
    assert a == qpsi.run_suite(ids, seed=3, draws=10)
    assert len(qpsi.identity_ids()) >= 22
    assert qpsi.verify("CURIOUS_X2", draws=5)["status"] == "fail"
    with pytest.raises(qpsi.UnknownIdentity):
        qpsi.verify("NOPE")


def test_catalog_entry():
    (r,) = qpsi.verify_catalog(["order3.f"], order=20)
    assert r["status"] == "pass"
    assert len(qpsi.catalog_names()) == 46
