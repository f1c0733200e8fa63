"""Closed-form size claims and explicit certificate families for fcn(l).

``formula_value`` evaluates the claimed optimum of each parameter kind as a
function of the level.  ``construct`` builds the matching explicit vertex
set by the recursive rules (base set at level 1, then prefix the four copy
codes and patch a few labels near the copy roots).  Constructed sets are
returned as certificates; whether they are minimum is decided elsewhere.

The 2-domination, resolving domination and resolving independent domination
rules exist in two variants: the ``neighborhood`` form (union of the
neighborhoods of the labels ending 01) and the ``twins`` form (all labels
ending 00 or 11).  They disagree in size from level 2 on, which the claim
checks surface rather than hide.
"""

from __future__ import annotations

from functools import lru_cache

from .generators import PREFIXES, fcn, fcn_root_suffix
from .graph import GraphError
from .serialize import make_certificate
from .verify import Certificate, ParameterKind

DEFAULT_VARIANT = "default"
VARIANT_KINDS = {ParameterKind.TWODOM, ParameterKind.RDOM, ParameterKind.RIDOM}
VARIANTS = (DEFAULT_VARIANT, "neighborhood", "twins")


def formula_value(kind: ParameterKind, level: int) -> int:
    """Claimed optimum for the kind on fcn(level)."""
    if level < 0:
        raise GraphError(f"level must be >= 0, got {level}")
    k = ParameterKind(kind)
    if k is ParameterKind.QDDOM:
        raise GraphError("no closed form is claimed for quasi double domination on fcn(l)")
    if k in (ParameterKind.DOM, ParameterKind.IDOM):
        value = 2
        for _ in range(level):
            value = 4 * value - 2
        return value
    if k is ParameterKind.TDOM:
        if level == 0:
            return 2
        value = 8
        for _ in range(level - 1):
            value = 4 * value - 2
        return value
    if k is ParameterKind.CDOM:
        value = 2
        for _ in range(level):
            value = 4 * (value + 1)
        return value
    if k is ParameterKind.DDOM:
        if level == 0:
            return 3
        value = 12
        for _ in range(level - 1):
            value = 4 * (value - 1)
        return value
    if k is ParameterKind.TWODOM:
        return 2 * 4**level if level else 2
    if k is ParameterKind.DIM:
        return 4**level if level else 2
    if k is ParameterKind.RDOM:
        if level == 0:
            return 2
        return 4 * formula_value(ParameterKind.TWODOM, level - 1)
    if k is ParameterKind.RIDOM:
        if level == 0:
            raise GraphError("no resolving independent dominating set exists on fcn(0)")
        return 4 * formula_value(ParameterKind.TWODOM, level - 1)
    if k is ParameterKind.RTDOM:
        if level == 0:
            return 2
        return 2 * 4**level
    if k is ParameterKind.RCDOM:
        if level == 0:
            return 2
        return 4 * (formula_value(ParameterKind.CDOM, level - 1) + 1)
    raise GraphError(f"no formula for {k.value}")


# ---------------------------------------------------------------------------
# recursive set builders (labels, not indices)

_DOM_BASE = ("1101", "1010", "1001", "0110", "0101", "0001")
_TOTAL_BASE = ("1111", "1110", "1011", "1010", "0111", "0110", "0011", "0010")


def _prefixed(prev: frozenset[str]) -> set[str]:
    return {p + d for p in PREFIXES for d in prev}


def _remove_all(current: set[str], labels) -> None:
    for label in labels:
        if label not in current:
            raise GraphError(f"construction rule expected {label} in the set and it is missing")
        current.remove(label)


def _add_all(current: set[str], labels) -> None:
    for label in labels:
        if label in current:
            raise GraphError(f"construction rule expected {label} to be new and it is already present")
        current.add(label)


@lru_cache(maxsize=None)
def _dom_set(level: int) -> frozenset[str]:
    if level == 1:
        return frozenset(_DOM_BASE)
    cur = _prefixed(_dom_set(level - 1))
    r = fcn_root_suffix(level)
    _remove_all(cur, ("11" + r, "00" + r))
    return frozenset(cur)


@lru_cache(maxsize=None)
def _tdom_set(level: int) -> frozenset[str]:
    if level == 1:
        return frozenset(_TOTAL_BASE)
    cur = _prefixed(_tdom_set(level - 1))
    r = fcn_root_suffix(level)
    tail = "10" + "01" * (level - 2) + "11"
    _remove_all(cur, tuple(p + tail for p in PREFIXES))
    _add_all(cur, ("10" + r, "11" + r))
    return frozenset(cur)


@lru_cache(maxsize=None)
def _cdom_set(level: int) -> frozenset[str]:
    if level == 1:
        return frozenset(_TOTAL_BASE)
    cur = _prefixed(_cdom_set(level - 1))
    r = fcn_root_suffix(level)
    _add_all(cur, tuple(p + r for p in PREFIXES))
    return frozenset(cur)


@lru_cache(maxsize=None)
def _ddom_set(level: int) -> frozenset[str]:
    if level == 1:
        return frozenset(p + s for p in PREFIXES for s in ("01", "10", "11"))
    cur = _prefixed(_ddom_set(level - 1))
    tail = "10" + "01" * (level - 2) + "11"
    _remove_all(cur, tuple(p + tail for p in PREFIXES))
    return frozenset(cur)


@lru_cache(maxsize=None)
def _rtdom_set(level: int) -> frozenset[str]:
    if level == 1:
        return frozenset(_TOTAL_BASE)
    return frozenset(_prefixed(_rtdom_set(level - 1)))


def _neighborhood_union_set(level: int) -> frozenset[str]:
    g = fcn(level)
    out: set[str] = set()
    for v in range(g.n):
        if g.labels[v].endswith("01"):
            for w in g.adjacency[v]:
                out.add(g.labels[w])
    return frozenset(out)


def _twin_side_set(level: int) -> frozenset[str]:
    g = fcn(level)
    return frozenset(lbl for lbl in g.labels if lbl.endswith("00") or lbl.endswith("11"))


_BUILDERS = {
    ParameterKind.DOM: _dom_set,
    ParameterKind.IDOM: _dom_set,
    ParameterKind.TDOM: _tdom_set,
    ParameterKind.CDOM: _cdom_set,
    ParameterKind.DDOM: _ddom_set,
    ParameterKind.RTDOM: _rtdom_set,
    ParameterKind.RCDOM: _cdom_set,
}


def construct(kind: ParameterKind, level: int, variant: str = DEFAULT_VARIANT) -> Certificate:
    """Build the claimed set for the kind on fcn(level) as a certificate.

    ``variant`` selects between the neighborhood and twins forms where both
    exist; every other kind accepts only the default.
    """
    k = ParameterKind(kind)
    if variant not in VARIANTS:
        raise GraphError(f"unknown variant {variant!r}; choose one of {', '.join(VARIANTS)}")
    if level < 1:
        raise GraphError("constructed sets start at level 1")
    if k in (ParameterKind.DIM, ParameterKind.QDDOM):
        raise GraphError(f"no construction rule for {k.value}")
    if k in VARIANT_KINDS:
        chosen = "neighborhood" if variant == DEFAULT_VARIANT else variant
        members = _neighborhood_union_set(level) if chosen == "neighborhood" else _twin_side_set(level)
    else:
        if variant != DEFAULT_VARIANT:
            raise GraphError(f"{k.value} has a single construction; drop the variant")
        members = _BUILDERS[k](level)
    g = fcn(level)
    return make_certificate(g, k, [g.index_of(lbl) for lbl in sorted(members)])
