"""Exact Fischer decompositions of Clifford-valued polynomials.

Polynomials are dicts in the JSON format used by the ``hfischer`` command-line tool::

    {"m": 3, "terms": [{"alpha": [2, 0, 0], "blade": [], "coeff": "1"}]}

Coefficients are exact rationals written as strings such as ``"-3/2"``. Every function
also accepts the JSON text directly.
"""

import json
from fractions import Fraction

from . import _hfischer

__all__ = [
    "apply",
    "apply_word",
    "basis",
    "decompose",
    "decomposition_names",
    "h_action",
    "monomial",
    "operator_names",
    "poly",
    "theorem_names",
    "verify",
]

operator_names = _hfischer.operator_names
theorem_names = _hfischer.theorem_names
decomposition_names = _hfischer.decomposition_names
InputError = _hfischer.InputError


def _text(p):
    return p if isinstance(p, str) else json.dumps(p)


def poly(m, terms):
    """Builds a polynomial from (alpha, blade, coeff) triples; coeff may be int, str or Fraction."""
    return {
        "m": m,
        "terms": [{"alpha": list(a), "blade": list(b), "coeff": str(Fraction(c))} for a, b, c in terms],
    }


def monomial(m, alpha, blade=(), coeff=1):
    return poly(m, [(alpha, blade, coeff)])


def apply(op, p):
    """Applies a named derived operator such as ``"LAPLACIAN"`` or ``"DIRAC"``."""
    return json.loads(_hfischer.apply(op, _text(p)))


def apply_word(word, p):
    """Applies an alternating word in x^ (``w``) and x. (``d``); the last letter acts first."""
    return json.loads(_hfischer.apply_word(word, _text(p)))


def basis(kind, m, k, grades=None):
    """Exact basis of a space such as ``"hodge"``, ``"harmonic"``, ``"infra"`` or ``"mono-left"``."""
    return json.loads(_hfischer.basis(kind, m, k, None if grades is None else list(grades)))


def decompose(theorem, p, mode="", grades=None, side="left"):
    """Splits ``p``; the result lists labelled components and an exact residual."""
    grades = None if grades is None else list(grades)
    return json.loads(_hfischer.decompose(theorem, _text(p), mode, grades, side))


def h_action(params, p):
    """Acts by r = u_1 ... u_n, each u_i the unit vector of rational parameters in Q^{m-1}."""
    return json.loads(_hfischer.h_action([[str(Fraction(t)) for t in u] for u in params], _text(p)))


def verify(m, k_max, theorems=("all",), budget_seconds=0.0, threads=0, seed=None, samples=2):
    """Runs the exact verification sweep and returns its report."""
    kwargs = {"budget_seconds": budget_seconds, "threads": threads, "samples": samples}
    if seed is not None:
        kwargs["seed"] = seed
    return json.loads(_hfischer.verify(m, k_max, list(theorems), **kwargs))
