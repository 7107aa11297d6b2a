"""Independent brute-force references and worked instances shared by the tests.

Nothing here calls the package's algorithms; only its data types.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from fairsubsidy.core import Allocation, Instance, proportional_share

F = Fraction


def four_agent_example(eps=F(1, 100)) -> Instance:
    """Four agents, six items, identical ordering; used for the rounding example."""
    one = F(1)
    return Instance.build(
        [
            [one, one, one, one, one, 1 - 4 * eps],
            [one, one, one, one, 1 - 4 * eps, 0],
            [one, one, one, one, 0, 0],
            [one, one, one, one, 0, 0],
        ]
    )


def weighted_no_cut() -> Instance:
    """Two weighted agents where no single cut is weighted-proportional (costs / 4)."""
    raw = [[4, 1, 1, 1, 1, 1, 1], [3, 3, 1, 1, 1, 1, 0]]
    return Instance.build([[F(v, 4) for v in row] for row in raw], weights=["0.43", "0.57"])


def all_allocations(n: int, m: int):
    for owners in itertools.product(range(n), repeat=m):
        yield Allocation.from_owners(owners, n)


def brute_min_prop_subsidy(inst: Instance) -> Fraction:
    """Plain enumeration of all n**m allocations."""
    shares = [proportional_share(inst, i) for i in range(inst.n)]
    best = None
    for owners in itertools.product(range(inst.n), repeat=inst.m):
        got = [F(0)] * inst.n
        for e, i in enumerate(owners):
            got[i] += inst.matrix[i][e]
        if inst.is_chores:
            total = sum(max(got[i] - shares[i], 0) for i in range(inst.n))
        else:
            total = sum(max(shares[i] - got[i], 0) for i in range(inst.n))
        if best is None or total < best:
            best = total
    return F(best)


def brute_matching(weights):
    """Minimum weight of an injective row-to-column map, over all such maps."""
    a, b = len(weights), len(weights[0]) if weights else 0
    best = None
    for cols in itertools.permutations(range(b), a):
        w = sum((weights[r][c] for r, c in enumerate(cols)), F(0))
        if best is None or w < best:
            best = w
    return best if best is not None else F(0)


def lex_first_optimal(weights):
    """Lexicographically smallest column tuple among minimum-weight matchings."""
    a, b = len(weights), len(weights[0])
    target = brute_matching(weights)
    for cols in itertools.permutations(range(b), a):
        if sum((weights[r][c] for r, c in enumerate(cols)), F(0)) == target:
            return cols


def floyd_max_paths(graph):
    """Max simple-path weight from each vertex via Floyd-Warshall on -w
    (valid only when no cycle is positive)."""
    n = len(graph)
    d = [[graph[i][j] if i != j else F(0) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] > d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return [max(row) for row in d], any(d[i][i] > 0 for i in range(n))


def has_positive_cycle(graph) -> bool:
    n = len(graph)
    for size in range(2, n + 1):
        for seq in itertools.permutations(range(n), size):
            if seq[0] != min(seq):
                continue
            w = sum(graph[seq[k]][seq[(k + 1) % size]] for k in range(size))
            if w > 0:
                return True
    return False
