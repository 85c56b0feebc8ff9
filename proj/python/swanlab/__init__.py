"""Exact Swan conductor computations for Artin-Schreier-Witt characters.

The heavy lifting happens in the compiled ``_core`` extension; this
module converts between Python dictionaries and the JSON documents the
core speaks. All values are exact: field elements cross the boundary as
expression strings like ``"y*pi^-2"`` and come back in the same grammar.

Quick start::

    import swanlab
    rep = swanlab.conductor(["pi^-2"], p=3)
    rep["sw"], rep["rsw"]["beta"]       # (2, '2')
"""

from __future__ import annotations

import json as _json
from typing import Iterable, Mapping, Sequence

from . import _core
from ._core import ParseError, SwanlabError  # noqa: F401

__version__ = _core.__version__
SCHEMA = _core.schema

__all__ = [
    "SCHEMA",
    "ParseError",
    "SwanlabError",
    "conductor",
    "conductor_batch",
    "field",
    "filtration",
    "normal_form",
    "reduce",
    "render",
    "selftest",
    "selftest_suites",
    "witt_op",
]


def field(p=None, *, q=None, e=None, residue="perfect", modulus=None):
    """Field description dict for GF(q)((pi)) or GF(q)(y)((pi))."""
    desc = {}
    if p is not None:
        desc["p"] = p
    if q is not None:
        desc["q"] = q
    if e is not None:
        desc["e"] = e
    if modulus is not None:
        desc["modulus"] = list(modulus)
    desc["residue"] = residue
    return desc


def _field_arg(kwargs):
    f = kwargs.pop("field", None)
    if f is None:
        f = field(
            kwargs.pop("p", None),
            q=kwargs.pop("q", None),
            e=kwargs.pop("e", None),
            residue=kwargs.pop("residue", "perfect"),
            modulus=kwargs.pop("modulus", None),
        )
    if kwargs:
        raise TypeError(f"unexpected arguments: {sorted(kwargs)}")
    return dict(f)


def _job(witt, kwargs):
    budget = kwargs.pop("budget", None)
    depth = kwargs.pop("depth", None)
    phase1_cap = kwargs.pop("phase1_cap", None)
    job = {"field": _field_arg(kwargs), "witt": list(witt)}
    if budget is not None:
        job["budget"] = budget
    if depth is not None:
        job["depth"] = depth
    if phase1_cap is not None:
        job["phase1_cap"] = phase1_cap
    return job


def conductor(witt: Sequence[str], **kwargs) -> dict:
    """Full conductor report: sw, sw_mod, refined classes, slopes."""
    return _json.loads(_core.conductor_json(_json.dumps(_job(witt, kwargs))))


def conductor_batch(jobs: Iterable[Mapping]) -> dict:
    """Many conductor jobs at once; results keep the input order."""
    doc = {"jobs": [dict(j) for j in jobs]}
    return _json.loads(_core.conductor_batch_json(_json.dumps(doc)))


def reduce(witt: Sequence[str], **kwargs) -> dict:
    """Minimal-filtration representative of the character class."""
    return _json.loads(_core.reduce_json(_json.dumps(_job(witt, kwargs))))


def filtration(witt: Sequence[str], n_range=(0, 10), **kwargs) -> dict:
    """Membership tables for fil_n and fil'_n over a range of levels."""
    n_lo, n_hi = n_range
    return _json.loads(
        _core.filtration_json(_json.dumps(_job(witt, kwargs)), n_lo, n_hi)
    )


def normal_form(basis: str, n: int, alpha="0", beta="0", **kwargs) -> dict:
    """Layer decomposition of a graded class, or its obstruction."""
    f = _field_arg(kwargs)
    return _json.loads(
        _core.normalform_json(_json.dumps(f), basis, n, str(alpha), str(beta))
    )


def witt_op(op: str, witt: Sequence[str], other=None, **kwargs) -> dict:
    """Witt vector arithmetic: op in {add, neg, frobenius, v}."""
    return _json.loads(
        _core.witt_op_json(
            _json.dumps(_job(witt, kwargs)), op, list(other or [])
        )
    )


def render(expr: str, **kwargs) -> str:
    """Canonical rendering of one field element expression."""
    return _core.render(_json.dumps(_field_arg(kwargs)), expr)


def selftest(suites: Iterable[str] = ()) -> dict:
    """Run the built-in property suites (all of them by default)."""
    return _json.loads(_core.selftest_json(list(suites)))


def selftest_suites() -> list:
    """Names of the available property suites, in execution order."""
    return list(_core.selftest_suites())
