"""Exact 3j symbols, sphere structure constants and the Misiolek criterion."""

from fractions import Fraction
from typing import NamedTuple

from . import _sphmc
from ._sphmc import (
    HypothesisError,
    bracket,
    conjugate_time,
    critical_ratio,
    critical_table_csv,
    oracle_structure_coeff,
    run_suite,
)

__all__ = [
    "Exact",
    "HypothesisError",
    "bracket",
    "clebsch_gordan",
    "conjugate_time",
    "critical_ratio",
    "critical_table_csv",
    "g_real",
    "mc_coriolis",
    "mc_flat",
    "oracle_structure_coeff",
    "rhw_mc",
    "rhw_threshold",
    "run_suite",
    "threej",
]


class Exact(NamedTuple):
    """sign * sqrt(radicand), with a float approximation."""

    sign: int
    radicand: Fraction
    value: float


def _exact(raw):
    (sign, radicand), value = raw
    return Exact(sign, Fraction(radicand), value)


def _q(x) -> str:
    return str(Fraction(x))


def threej(l1, l2, l3, m1, m2, m3) -> Exact:
    return _exact(_sphmc.threej(l1, l2, l3, m1, m2, m3))


def clebsch_gordan(l1, m1, l2, m2, l3, m3) -> Exact:
    return _exact(_sphmc.clebsch_gordan(l1, m1, l2, m2, l3, m3))


def g_real(l1, m1, l2, m2, l3, m3) -> Exact:
    """Structure constant; the radicand excludes the 1/pi factor."""
    return _exact(_sphmc.g_real(l1, m1, l2, m2, l3, m3))


def _mc(d):
    d["flat"] = Fraction(d["flat"])
    d["delta"] = Fraction(d["delta"])
    d["rotation"] = Fraction(d["rotation"])
    d["summands"] = [(l3, Fraction(g2), w) for l3, g2, w in d["summands"]]
    return d


def mc_flat(a, b) -> dict:
    """MC(e_a, e_b); "flat" is the exact coefficient of 1/pi."""
    return _mc(_sphmc.mc_flat(tuple(a), tuple(b)))


def mc_coriolis(a, b, rotation) -> dict:
    return _mc(_sphmc.mc_coriolis(tuple(a), tuple(b), _q(rotation)))


def rhw_mc(A, C, wave, probe, rotation=0) -> dict:
    """A is a complex number or an exact (re, im) pair; a is the rotation."""
    if isinstance(A, (tuple, list)):
        re, im = A
    else:
        re, im = complex(A).real, complex(A).imag
    d = _sphmc.rhw_mc((_q(re), _q(im)), _q(C), tuple(wave), tuple(probe), _q(rotation))
    for key in ("plain_over_pi", "plain_rational", "extended_rational"):
        d[key] = Fraction(d[key])
    return d


def rhw_threshold(l1, m1, m, K=0) -> float:
    return _sphmc.rhw_threshold(l1, m1, m, _q(K))
