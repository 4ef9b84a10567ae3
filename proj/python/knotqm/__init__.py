"""Exact Kauffman bracket / topological qubit engine (Python face).

Structured results cross the boundary as JSON text; the wrappers here decode
them to plain dicts.
"""

import json as _json

from ._knotqm import (
    braid_writhe,
    catalan,
    densecode_braided,
    entropy,
    expand_qubits,
    jones_q,
    markov_trace_str,
    schmidt_rank,
    connectome_class_of,
)
from . import _knotqm as _core

__all__ = [
    "braid_writhe",
    "bracket",
    "catalan",
    "connectome_class_of",
    "densecode_braided",
    "densecode_simple",
    "entropy",
    "expand_qubits",
    "inequalities",
    "jones_q",
    "markov_trace_str",
    "schmidt_rank",
    "teleport",
]


def bracket(braid="", pd="", plat=False):
    """Full bracket result (raw / writhe / jones forms) as a dict."""
    return _json.loads(_core.bracket_json(braid=braid, pd=pd, plat=plat))


def inequalities(connectome):
    """Entropy-inequality report for a connectome dict or JSON string."""
    if not isinstance(connectome, str):
        connectome = _json.dumps(connectome)
    return _json.loads(_core.inequalities_json(connectome))


def teleport(psi, bell_label=0, alice_braid="", k=1000.0):
    a, b = complex(psi[0]), complex(psi[1])
    return _json.loads(
        _core.teleport_json(a, b, bell_label=bell_label, alice_braid=alice_braid, k=k)
    )


def densecode_simple(a, b, k=1000.0):
    return _json.loads(_core.densecode_simple_json(a, b, k=k))
