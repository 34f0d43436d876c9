"""Decide Invariant Basis Number for Cohn, relative Cohn and Leavitt path
algebras of finite graphs.

Graphs are passed as strings in the text format (``vertex v; edge e: v -> v;``)
or as JSON (``{"vertices": [...], "edges": [{"name", "from", "to"}]}``).
Dicts in the JSON shape are accepted too.
"""

import json

from . import _ibncert
from ._ibncert import Error

__all__ = [
    "Error",
    "companion",
    "example",
    "example_names",
    "family",
    "generators",
    "ibn_check",
    "monoid_equiv",
    "normal_form",
]


def _graph(graph):
    if isinstance(graph, dict):
        return json.dumps(graph)
    return graph


def companion(graph, x=None):
    """F(E), or E(X) when x is given. Returns graph, incidence and origin."""
    return json.loads(_ibncert.companion(_graph(graph), x))


def ibn_check(
    graph,
    algebra="cohn",
    x=(),
    max_m=_ibncert.DEFAULT_MAX_M,
    max_states=_ibncert.DEFAULT_MAX_STATES,
    max_coeff=_ibncert.DEFAULT_MAX_COEFFICIENT,
    max_depth=_ibncert.DEFAULT_MAX_DEPTH,
):
    return json.loads(
        _ibncert.ibn_check(
            _graph(graph), algebra, list(x), max_m, max_states, max_coeff, max_depth
        )
    )


def monoid_equiv(
    graph,
    a,
    b,
    presentation="graph",
    weights=None,
    max_states=_ibncert.DEFAULT_MAX_STATES,
    max_coeff=_ibncert.DEFAULT_MAX_COEFFICIENT,
    max_depth=_ibncert.DEFAULT_MAX_DEPTH,
):
    """Decide a ~ b. Without weights the invariant is solved for when possible."""
    if weights is not None:
        weights = [str(w) for w in weights]
    return json.loads(
        _ibncert.monoid_equiv(
            _graph(graph), list(a), list(b), presentation, weights,
            max_states, max_coeff, max_depth,
        )
    )


def normal_form(graph, x, presentation="graph"):
    return _ibncert.normal_form(_graph(graph), list(x), presentation)


def generators(graph, presentation="graph"):
    return _ibncert.generators(_graph(graph), presentation)


def example_names():
    return _ibncert.example_names()


def example(name):
    """A built-in graph in the text format."""
    return _ibncert.example(name)


def family(n, m):
    """(E_n as text, X_m as a list of vertex names)."""
    graph, x = _ibncert.family(n, m)
    return graph, list(x)
