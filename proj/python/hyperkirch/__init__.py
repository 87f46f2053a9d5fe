"""Kirchhoff polynomials, component groups, volumes and stability strata of multigraphs.

Graphs are dicts in the same shape the command line tool reads:
``{"vertices": [...], "edges": [{"id": ..., "head": ..., "tail": ...}, ...]}``.
Edge and vertex maps are dicts keyed by id. Exact values come back as ``int``
or ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import BudgetExceeded, DomainError, InputError

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "InputError",
    "component_group",
    "evaluate_psi",
    "fibre_volume",
    "is_generic",
    "is_semistable",
    "padic_oracle",
    "point_count",
    "psi",
    "run_cli",
    "strata",
    "total_volume",
]


def _doc(value):
    return value if isinstance(value, str) else json.dumps(value)


def psi(graph, method="delcon"):
    """Monomials of the Kirchhoff polynomial as a list of sorted edge-id tuples."""
    terms = json.loads(_core.psi(_doc(graph), method))
    return [tuple(t["monomial"]) for t in terms]


def evaluate_psi(graph, weights):
    return int(_core.evaluate_psi(_doc(graph), _doc(weights)))


def total_volume(graph):
    return int(_core.total_volume(_doc(graph)))


def fibre_volume(graph, valuation, q):
    return Fraction(_core.fibre_volume(_doc(graph), _doc(valuation), q))


def point_count(graph, q):
    return int(_core.point_count(_doc(graph), q))


def component_group(graph, weights):
    """Invariant factors d1 | d2 | ... of the component group."""
    doc = json.loads(_core.component_group(_doc(graph), _doc(weights)))
    return [int(d) for d in doc["invariant_factors"]]


def padic_oracle(graph, p, k, threads=1):
    """Exact residue-class estimate of the total volume and its error bound."""
    doc = json.loads(_core.padic_oracle(_doc(graph), p, k, threads))
    return Fraction(doc["estimate"]), Fraction(doc["error_bound"])


def is_semistable(graph, eta, N, spec):
    return _core.is_semistable(_doc(graph), _doc(eta), N, _doc(spec))


def is_generic(graph, eta, N):
    return _core.is_generic(_doc(graph), _doc(eta), N)


def strata(graph, eta, N, threads=1):
    return json.loads(_core.strata(_doc(graph), _doc(eta), N, threads))


def run_cli(*args):
    """Run the command line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
