"""q-series, generalized mu and mock theta toolkit (bindings over the C++ core)."""

import json
from fractions import Fraction

from ._qpsi import (
    DomainError,
    NonConvergence,
    PoleError,
    QpsiError,
    UnknownEntry,
    UnknownIdentity,
    catalog_names,
    hermite,
    identity_ids,
    jacobi_combo,
    mu,
    phi,
    pochhammer,
    printed_ids,
    psi,
    theta,
    theta_jtp,
    vartheta11,
    w,
    wp_diff,
    wp_diff_bailey,
    zwegers_mu,
)
from . import _qpsi


def expand(name, order=40):
    """Exact q-expansion of a catalog entry as [(Fraction exponent, Fraction coefficient)]."""
    return [(Fraction(e), Fraction(c)) for e, c in _qpsi.expand_pairs(name, order)]


def run_suite(ids=None, seed=42, draws=20, q=None):
    """Identity reports as dicts, in the order asked for (whole registry by default)."""
    return json.loads(_qpsi.suite_json(list(ids or []), seed, draws, q))


def verify(identity, seed=42, draws=20, q=None):
    return run_suite([identity], seed, draws, q)[0]


def verify_catalog(names=None, order=40):
    return json.loads(_qpsi.catalog_json(list(names or []), order))
