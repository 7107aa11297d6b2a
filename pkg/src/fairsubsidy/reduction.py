"""
Reduction to identical-ordering (IDO) instances and the lifting step back.

Every agent's row is sorted from most to least costly (or valuable), so all
agents agree on the item order. An allocation of the sorted instance is then
turned into one of the original instance by letting the owners pick items
one at a time; no agent ends up worse off than in the sorted instance.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Allocation, FairDivisionError, Instance


@dataclass(frozen=True)
class IdoCertificate:
    """``ranking[i][k]`` is the original index of agent i's k-th most costly
    (or most valuable) item."""

    ranking: tuple[tuple[int, ...], ...]
    instance: Instance


def is_ido(inst: Instance) -> bool:
    return all(row[e] >= row[e + 1] for row in inst.matrix for e in range(inst.m - 1))


def to_ido(inst: Instance) -> tuple[Instance, IdoCertificate]:
    ranking = []
    rows = []
    for row in inst.matrix:
        # stable: equal entries keep their original order
        order = sorted(range(inst.m), key=lambda e: -row[e])
        ranking.append(tuple(order))
        rows.append(tuple(row[e] for e in order))
    ido = inst.with_matrix(rows)
    return ido, IdoCertificate(tuple(ranking), ido)


def lift_allocation(ido_alloc: Allocation, cert: IdoCertificate, inst: Instance) -> Allocation:
    """Map an allocation of the IDO instance back onto ``inst``.

    For chores the owners of sorted positions m, m-1, ..., 1 each take their
    cheapest remaining item. For goods the owners of positions 1, ..., m take
    their most valuable remaining item. Ties go to the lowest item index.
    """
    m = inst.m
    owner = ido_alloc.owners(m)
    if any(o < 0 for o in owner):
        raise FairDivisionError("IDO allocation is incomplete")
    remaining = set(range(m))
    bundles: list[list[int]] = [[] for _ in range(inst.n)]
    positions = range(m - 1, -1, -1) if inst.is_chores else range(m)
    for j in positions:
        i = owner[j]
        row = inst.matrix[i]
        if inst.is_chores:
            pick = min(remaining, key=lambda e: (row[e], e))
        else:
            pick = min(remaining, key=lambda e: (-row[e], e))
        remaining.remove(pick)
        bundles[i].append(pick)
    return Allocation.from_bundles(bundles)


def dominates(inst: Instance, lifted: Allocation, ido: Instance, ido_alloc: Allocation) -> bool:
    """True if every agent is at least as well off in ``lifted`` as in ``ido_alloc``."""
    for i in range(inst.n):
        mine = sum((inst.matrix[i][e] for e in lifted.bundles[i]), Fraction(0))
        before = sum((ido.matrix[i][e] for e in ido_alloc.bundles[i]), Fraction(0))
        if (mine > before) if inst.is_chores else (mine < before):
            return False
    return True
