"""Brute-force minimum subsidies over all n**m allocations (desk-scale only)."""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import lcm

from .core import Allocation, FairDivisionError, Instance, proportional_share

DEFAULT_CAP = 10**7


class TooLarge(FairDivisionError):
    pass


def _check_cap(inst: Instance, cap: int) -> None:
    if inst.n ** inst.m > cap:
        raise TooLarge(f"{inst.n}**{inst.m} allocations exceed the cap of {cap}")


def _scaled(inst: Instance) -> tuple[list[list[int]], list[int], int]:
    """Integer matrix and shares over a common denominator."""
    shares = [proportional_share(inst, i) for i in range(inst.n)]
    denom = lcm(1, *(v.denominator for row in inst.matrix for v in row), *(s.denominator for s in shares))
    matrix = [[int(v * denom) for v in row] for row in inst.matrix]
    return matrix, [int(s * denom) for s in shares], denom


def oracle_min_total_subsidy(inst: Instance, cap: int = DEFAULT_CAP) -> tuple[Fraction, Allocation]:
    """Exact minimum of the total proportional subsidy, with a witness.

    Depth-first over item-to-agent maps with branch and bound: for chores the
    partial deficit only grows; for goods the deficit is bounded below by
    assuming every agent still gets all remaining items.
    """
    _check_cap(inst, cap)
    n, m = inst.n, inst.m
    matrix, shares, denom = _scaled(inst)
    order = sorted(range(m), key=lambda e: -max((matrix[i][e] for i in range(n)), default=0))
    chores = inst.is_chores
    # suffix[k][i]: agent i's total for items order[k:]
    suffix = [[0] * n for _ in range(m + 1)]
    for k in range(m - 1, -1, -1):
        e = order[k]
        suffix[k] = [suffix[k + 1][i] + matrix[i][e] for i in range(n)]

    load = [0] * n
    owner = [0] * m
    best = [None, None]

    def penalty(k: int) -> int:
        if chores:
            return sum(max(load[i] - shares[i], 0) for i in range(n))
        return sum(max(shares[i] - load[i] - suffix[k][i], 0) for i in range(n))

    def dfs(k: int) -> None:
        bound = penalty(k)
        if best[0] is not None and bound >= best[0]:
            return
        if k == m:
            best[0] = bound
            best[1] = list(owner)
            return
        e = order[k]
        for i in range(n):
            load[i] += matrix[i][e]
            owner[e] = i
            dfs(k + 1)
            load[i] -= matrix[i][e]

    dfs(0)
    return Fraction(best[0], denom), Allocation.from_owners(best[1], n)


def _max_paths(w: list[list[int]]) -> list[int] | None:
    """Enumerate every simple path and cycle; None if some cycle is positive."""
    n = len(w)
    best = [0] * n
    for size in range(2, n + 1):
        for seq in itertools.permutations(range(n), size):
            weight = sum(w[seq[k]][seq[k + 1]] for k in range(size - 1))
            if weight + w[seq[-1]][seq[0]] > 0:
                return None
            if weight > best[seq[0]]:
                best[seq[0]] = weight
    return best


def oracle_min_total_efs_subsidy(inst: Instance, cap: int = DEFAULT_CAP) -> Fraction:
    """Minimum total subsidy of any envy-freeable allocation (chores).

    For a fixed allocation the cheapest envy-eliminating payments are the
    maximum path weights of its envy graph, provided no cycle is positive.
    """
    if not inst.is_chores:
        raise FairDivisionError("the EFS oracle covers chores only")
    _check_cap(inst, cap)
    n, m = inst.n, inst.m
    matrix, _, denom = _scaled(inst)
    best = None
    for owners in itertools.product(range(n), repeat=m):
        held = [[0] * n for _ in range(n)]  # held[i][j] = c_i(X_j)
        for e, j in enumerate(owners):
            for i in range(n):
                held[i][j] += matrix[i][e]
        w = [[held[i][i] - held[i][j] for j in range(n)] for i in range(n)]
        paths = _max_paths(w)
        if paths is None:
            continue
        total = sum(paths) - n * min(paths)
        if best is None or total < best:
            best = total
    return Fraction(best, denom)
