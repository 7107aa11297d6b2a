"""
Envy-freeness with subsidies for chores.

Items are handed out in rounds; each round is a minimum-weight perfect
matching of all agents into the still-unallocated items (padded with
zero-cost dummies so every round matches everyone). Subsidies are the
maximum path weights in the envy graph built from clipped costs, which
keeps every payment at most 1 and the total at most n - 1.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .core import Allocation, FairDivisionError, Instance, SubsidyVector
from .verify import envy_matrix

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


class PositiveCycle(FairDivisionError):
    """The envy graph has a positive-weight cycle, so no subsidy can remove envy."""


def _hungarian(cost: Sequence[Sequence[int]]) -> list[int]:
    """Minimum-cost assignment of every row to a distinct column (rows <= cols).

    Integer potentials version of the Kuhn-Munkres shortest augmenting path
    method; returns ``col_of[row]``.
    """
    a, b = len(cost), len(cost[0])
    INF = float("inf")
    u = [0] * (a + 1)
    v = [0] * (b + 1)
    match = [0] * (b + 1)  # match[col] = row (1-based), 0 = free
    way = [0] * (b + 1)
    for row in range(1, a + 1):
        match[0] = row
        col0 = 0
        minv = [INF] * (b + 1)
        used = [False] * (b + 1)
        while True:
            used[col0] = True
            r0 = match[col0]
            delta = INF
            col1 = 0
            for col in range(1, b + 1):
                if used[col]:
                    continue
                cur = cost[r0 - 1][col - 1] - u[r0] - v[col]
                if cur < minv[col]:
                    minv[col] = cur
                    way[col] = col0
                if minv[col] < delta:
                    delta = minv[col]
                    col1 = col
            for col in range(b + 1):
                if used[col]:
                    u[match[col]] += delta
                    v[col] -= delta
                else:
                    minv[col] -= delta
            col0 = col1
            if match[col0] == 0:
                break
        while col0:
            col1 = way[col0]
            match[col0] = match[col1]
            col0 = col1
    col_of = [0] * a
    for col in range(1, b + 1):
        if match[col]:
            col_of[match[col] - 1] = col - 1
    return col_of


def min_weight_perfect_matching(weights: Sequence[Sequence[Fraction]]) -> tuple[tuple[int, ...], Fraction]:
    """Match every row to a distinct column at minimum total weight.

    Among optimal matchings the lexicographically smallest column vector is
    returned. Weights are scaled to integers and a tie-breaking term smaller
    than any weight gap is added, so one exact assignment solve suffices.
    """
    a = len(weights)
    if a == 0:
        return (), ZERO
    b = len(weights[0])
    if a > b:
        raise FairDivisionError(f"cannot match {a} rows into {b} columns")
    scale = lcm(*(Fraction(w).denominator for row in weights for w in row))
    base = b + 1
    # rank term < base**a, so it only breaks exact ties
    big = base ** a
    cost = [
        [int(Fraction(weights[r][c]) * scale) * big + c * base ** (a - 1 - r) for c in range(b)]
        for r in range(a)
    ]
    cols = tuple(_hungarian(cost))
    return cols, sum((Fraction(weights[r][cols[r]]) for r in range(a)), ZERO)


@dataclass(frozen=True)
class MatchingRounds:
    """``rounds[t][i]`` is the (padded) item index agent i receives in round t.
    Indices ``>= m`` are zero-cost dummies."""

    rounds: tuple[tuple[int, ...], ...]
    m: int
    weights: tuple[Fraction, ...]

    @property
    def T(self) -> int:
        return len(self.rounds)

    def is_dummy(self, item: int) -> bool:
        return item >= self.m


def bounded_subsidy_allocate(inst: Instance) -> tuple[Allocation, MatchingRounds]:
    if not inst.is_chores:
        raise FairDivisionError("the bounded-subsidy allocation is defined for chores")
    n, m = inst.n, inst.m
    T = -(-m // n)
    padded = T * n
    cost = [list(row) + [ZERO] * (padded - m) for row in inst.matrix]
    remaining = list(range(padded))
    rounds = []
    weights = []
    bundles: list[list[int]] = [[] for _ in range(n)]
    for t in range(T):
        sub = [[cost[i][e] for e in remaining] for i in range(n)]
        cols, weight = min_weight_perfect_matching(sub)
        picked = tuple(remaining[c] for c in cols)
        logger.debug("round %d: %s (weight %s)", t + 1, [p + 1 for p in picked], weight)
        rounds.append(picked)
        weights.append(weight)
        for i, e in enumerate(picked):
            if e < m:
                bundles[i].append(e)
        taken = set(picked)
        remaining = [e for e in remaining if e not in taken]
    return Allocation.from_bundles(bundles), MatchingRounds(tuple(rounds), m, tuple(weights))


def constructed_costs(inst: Instance, rounds: MatchingRounds) -> list[list[Fraction]]:
    """Clip costs of other agents' early items by the agent's own next item.

    For agent i and another agent j's round-t item: ``min(c_i(that item),
    c_i(i's round t+1 item))`` when t < T, unchanged in the last round. Own
    items keep their cost.
    """
    n, m, T = inst.n, inst.m, rounds.T

    def c(i: int, e: int) -> Fraction:
        return inst.matrix[i][e] if e < m else ZERO

    cbar = [list(row) for row in inst.matrix]
    for i in range(n):
        for t, picked in enumerate(rounds.rounds):
            for j, e in enumerate(picked):
                if e >= m or j == i:
                    continue
                if t < T - 1:
                    cbar[i][e] = min(c(i, e), c(i, rounds.rounds[t + 1][i]))
                else:
                    cbar[i][e] = c(i, e)
    return cbar


def max_path_subsidies(graph: Sequence[Sequence[Fraction]]) -> SubsidyVector:
    """Maximum weight of a path leaving each vertex (the empty path counts as 0).

    Runs n - 1 relaxation passes; a further improvement on pass n means a
    positive-weight cycle.
    """
    n = len(graph)
    best = [ZERO] * n
    for sweep in range(n):
        changed = False
        for i in range(n):
            for j in range(n):
                if i != j and graph[i][j] + best[j] > best[i]:
                    best[i] = graph[i][j] + best[j]
                    changed = True
        if not changed:
            return SubsidyVector(tuple(best))
    raise PositiveCycle("envy graph contains a positive-weight cycle")


def envy_graph(inst: Instance, alloc: Allocation, matrix=None) -> list[list[Fraction]]:
    return envy_matrix(inst, alloc, matrix)


def efs_solve(inst: Instance) -> tuple[Allocation, SubsidyVector]:
    alloc, rounds = bounded_subsidy_allocate(inst)
    cbar = constructed_costs(inst, rounds)
    s = max_path_subsidies(envy_graph(inst, alloc, cbar))
    floor = min(s.s, default=ZERO)
    if floor:
        # shifting all payments equally preserves envy-freeness
        s = SubsidyVector(tuple(x - floor for x in s.s))
    return alloc, s
