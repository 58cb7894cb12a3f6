"""Exact transfer-matrix toolkit for the multispecies inhomogeneous t-PushTASEP.

Every value crossing this boundary is an exact rational encoded as a string
("p/q" or "p"); use fractions.Fraction to compute with them.
"""

import json as _json

from ._core import (
    cascade_json,
    markov_json,
    rmatrix_json,
    stationary_json,
    transfer_json,
    verify as _verify,
)

__all__ = [
    "markov",
    "transfer",
    "rmatrix",
    "stationary",
    "cascade",
    "verify",
]


def markov(kind, n, L, m=None, t="1/2", x=None):
    """Markov matrix of the PushTASEP (kind='push', sector required) or the
    n-species ASEP (kind='asep') in the shared sparse-matrix format."""
    return _json.loads(markov_json(kind, n, L, m, t, x))


def transfer(kind, k, n, L, m=None, t="1/2", x=None, z=None):
    """Transfer matrix T^k(z) (kind='antisym') or T_k(z) (kind='sym');
    polynomial entries when z is None."""
    return _json.loads(transfer_json(kind, k, n, L, m, t, x, z))


def rmatrix(construction, n, k, t, z):
    """R-matrix by 'closed', 'fused' or 'threed' construction."""
    return _json.loads(rmatrix_json(construction, n, k, t, z))


def stationary(n, L, m, t="1/2", x=None, seed=1):
    """Stationary kernel vector(s) plus the eigenvalue table at sampled z."""
    return _json.loads(stationary_json(n, L, m, t, x, seed))


def cascade(sigma, j, t="1/2"):
    """Exact cascade outcome distribution after activating site j (0-based)."""
    return _json.loads(cascade_json(sigma, j, t))


def verify(suite, n, L, m=None, t="1/2", x=None, seed=1):
    """Run a verification suite; returns a list of report dicts."""
    return [_json.loads(line) for line in _verify(suite, n, L, m, t, x, seed)]
