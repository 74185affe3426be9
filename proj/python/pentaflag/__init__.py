"""Exact flag-algebra certificate checker and pentagon toolkit for triangle-free graphs.

Rational results are returned as fractions.Fraction; graphs are graph6 strings.
"""

from fractions import Fraction

from . import _pentaflag as _core
from ._pentaflag import (
    CertificateError,
    Graph6Error,
    automorphism_count,
    bundled_certificate,
    canonical_form,
    chi,
    count_induced,
    count_pentagons,
    enumerate_models,
    extremal,
    __version__,
)

__all__ = [
    "CertificateError",
    "Graph6Error",
    "automorphism_count",
    "blowup",
    "blowup_limit_density",
    "bundled_certificate",
    "canonical_form",
    "chi",
    "count_induced",
    "count_pentagons",
    "cut_distance",
    "delta_hat",
    "density",
    "enumerate_models",
    "extremal",
    "strong_hom_expansion",
    "verify",
]


def verify(certificate_json=None, workers=1):
    """Verify a certificate document (the bundled one by default)."""
    if certificate_json is None:
        certificate_json = bundled_certificate()
    report = _core.verify(certificate_json, workers)
    for key in ("bound", "target_coefficient", "derived_bound", "max_coefficient"):
        report[key] = Fraction(report[key])
    report["coefficients"] = [(g, Fraction(c)) for g, c in report["coefficients"]]
    return report


def density(h, g):
    return Fraction(_core.density(h, g))


def blowup_limit_density(h, g):
    return Fraction(_core.blowup_limit_density(h, g))


def strong_hom_expansion(h):
    return Fraction(_core.strong_hom_expansion(h))


def blowup(spec):
    return _core.blowup(spec)


def cut_distance(g1, g2):
    """(d_box, S, T) with S and T as 0/1 strings over the vertices."""
    value, rows, cols = _core.cut_distance(g1, g2)
    return Fraction(value), rows, cols


def delta_hat(g1, g2, workers=1):
    return Fraction(_core.delta_hat(g1, g2, workers))
