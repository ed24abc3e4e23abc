"""Exact verification of the classified Lie bialgebra structures on
current algebras: r-matrices and the classical Yang-Baxter equation,
Manin triples, trace extensions, orders, and admissible-triple
enumeration, all over exact rationals."""
import json as _json

from _liecurrent import (  # noqa: F401
    __version__,
    cybe_is_zero,
    skew_holds,
)
import _liecurrent as _core


def verify_case(case, algebra="sl2", m1="", m2="", window=(-10, 6), depth=4):
    """Full suite for one case; returns the report as a dict."""
    return _json.loads(_core.verify_case_json(case, algebra, m1, m2,
                                              window[0], window[1], depth))


def algebra(name):
    """Exact structure constants, Gram matrices and root data."""
    return _json.loads(_core.algebra_json(name))


def rmatrix(case, algebra="sl2", m1="", m2=""):
    return _json.loads(_core.rmatrix_json(case, algebra, m1, m2))


def enum_bd(algebra, vertex):
    """Admissible triples on the extended diagram."""
    return _json.loads(_core.enum_bd_json(algebra, vertex))


def classify(coeffs):
    """Classify an inverse weight 1/a(x) given by its coefficients."""
    return _json.loads(_core.classify_json([str(c) for c in coeffs]))


def normalize_trace(n, alpha, order=6):
    """Normalizing substitution for a finite trace extension."""
    return _json.loads(_core.normalize_json(n, [str(a) for a in alpha],
                                            order))


def order_perp(algebra, vertex, window=(-8, 4)):
    return _json.loads(_core.order_perp_json(algebra, vertex, window[0],
                                             window[1]))


def verify_fdata(fdata, algebra, vertex):
    """Check a subalgebra with a 2-cocycle against the vertex data.
    `fdata` is {"basis": [["p/q", ...], ...], "form": [[...], ...]}."""
    return _json.loads(_core.verify_fdata_json(_json.dumps(fdata), algebra,
                                               vertex))
