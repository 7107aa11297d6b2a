"""Exact fairness predicates and minimum subsidies."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import Allocation, Instance, SubsidyVector, bundle_value, proportional_share

ZERO = Fraction(0)


def min_subsidy_vector(inst: Instance, alloc: Allocation) -> SubsidyVector:
    """Smallest payments making ``alloc`` (weighted) proportional.

    Chores: ``max(c_i(X_i) - share_i, 0)``; goods: ``max(share_i - v_i(X_i), 0)``.
    """
    s = []
    for i, bundle in enumerate(alloc.bundles):
        gap = bundle_value(inst, i, bundle) - proportional_share(inst, i)
        if not inst.is_chores:
            gap = -gap
        s.append(max(gap, ZERO))
    return SubsidyVector(tuple(s))


def _max_item(inst: Instance, i: int, items) -> Fraction:
    return max((inst.matrix[i][e] for e in items), default=ZERO)


def is_prop(inst: Instance, alloc: Allocation, i: int) -> bool:
    v = bundle_value(inst, i, alloc.bundles[i])
    share = proportional_share(inst, i)
    return v <= share if inst.is_chores else v >= share


def is_prop1(inst: Instance, alloc: Allocation, i: int) -> bool:
    """Chores: drop the costliest own item. Goods: add the best outside item."""
    bundle = alloc.bundles[i]
    v = bundle_value(inst, i, bundle)
    share = proportional_share(inst, i)
    if inst.is_chores:
        return v - _max_item(inst, i, bundle) <= share
    outside = set(range(inst.m)) - set(bundle)
    return v + _max_item(inst, i, outside) >= share


def is_propx(inst: Instance, alloc: Allocation, i: int) -> bool:
    bundle = alloc.bundles[i]
    v = bundle_value(inst, i, bundle)
    share = proportional_share(inst, i)
    row = inst.matrix[i]
    if inst.is_chores:
        if not bundle:
            return True
        return v - min(row[e] for e in bundle) <= share
    outside = set(range(inst.m)) - set(bundle)
    if not outside:
        return v >= share
    return v + min(row[e] for e in outside) >= share


def envy_matrix(inst: Instance, alloc: Allocation, matrix=None) -> list[list[Fraction]]:
    """``w[i][j] = c_i(X_i) - c_i(X_j)``, optionally under a substitute cost matrix."""
    rows = inst.matrix if matrix is None else matrix
    n = inst.n
    own = [[sum((rows[i][e] for e in b), ZERO) for b in alloc.bundles] for i in range(n)]
    return [[own[i][i] - own[i][j] for j in range(n)] for i in range(n)]


def is_ef(inst: Instance, alloc: Allocation) -> bool:
    w = envy_matrix(inst, alloc)
    if inst.is_chores:
        return all(x <= 0 for row in w for x in row)
    return all(x >= 0 for row in w for x in row)


def is_ef1(inst: Instance, alloc: Allocation) -> bool:
    """Chores: ``c_i(X_i - e) <= c_i(X_j)`` for the costliest ``e`` in ``X_i``;
    goods: ``v_i(X_i) >= v_i(X_j - e)`` for the most valued ``e`` in ``X_j``."""
    n = inst.n
    for i in range(n):
        row = inst.matrix[i]
        mine = bundle_value(inst, i, alloc.bundles[i])
        for j in range(n):
            if i == j:
                continue
            theirs = bundle_value(inst, i, alloc.bundles[j])
            if inst.is_chores:
                if mine - _max_item(inst, i, alloc.bundles[i]) > theirs:
                    return False
            elif mine < theirs - max((row[e] for e in alloc.bundles[j]), default=ZERO):
                return False
    return True


def is_efs(inst: Instance, alloc: Allocation, s: SubsidyVector) -> bool:
    w = envy_matrix(inst, alloc)
    n = inst.n
    for i in range(n):
        for j in range(n):
            # chores: c_i(X_i) - s_i <= c_i(X_j) - s_j; goods mirror
            if inst.is_chores and w[i][j] - s[i] + s[j] > 0:
                return False
            if not inst.is_chores and w[i][j] + s[i] - s[j] < 0:
                return False
    return True


@dataclass(frozen=True)
class FairnessReport:
    prop: bool
    prop1: bool
    propx: bool
    ef: bool
    ef1: bool
    efs: Optional[bool]
    props: Optional[bool]
    shares: tuple[Fraction, ...]
    deficits: tuple[Fraction, ...]

    def flags(self) -> list[str]:
        names = ["prop", "prop1", "propx", "ef", "ef1", "efs", "props"]
        return [name.upper() for name in names if getattr(self, name)]


def fairness_report(
    inst: Instance, alloc: Allocation, s: SubsidyVector | None = None
) -> FairnessReport:
    alloc.check(inst.m)
    agents = range(inst.n)
    deficits = min_subsidy_vector(inst, alloc).s
    props = None
    if s is not None:
        props = all(s[i] >= deficits[i] for i in agents)
    report = FairnessReport(
        prop=all(is_prop(inst, alloc, i) for i in agents),
        prop1=all(is_prop1(inst, alloc, i) for i in agents),
        propx=all(is_propx(inst, alloc, i) for i in agents),
        ef=is_ef(inst, alloc),
        ef1=is_ef1(inst, alloc),
        efs=None if s is None else is_efs(inst, alloc, s),
        props=props,
        shares=tuple(proportional_share(inst, i) for i in agents),
        deficits=deficits,
    )
    assert not report.propx or report.prop1
    assert inst.is_weighted or not report.ef or report.prop
    return report
