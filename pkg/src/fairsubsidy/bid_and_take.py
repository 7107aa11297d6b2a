"""
Weighted proportionality for general additive costs: fractional bid-and-take
followed by largest-fraction rounding.

Items are processed in index order. Each item flows continuously to the
active agent for whom it is relatively cheapest (chores) or relatively most
valuable (goods), measured against her total, until the item is used up or
that agent reaches her weighted share and drops out.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .core import Allocation, FairDivisionError, FracAllocation, Instance, proportional_share
from .rounding import RoundingOutcome, Scheme
from .verify import min_subsidy_vector

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


class DegenerateAgent(FairDivisionError):
    pass


@dataclass(frozen=True)
class Deactivation:
    agent: int
    item: int
    fraction: Fraction
    active_before: tuple[int, ...]
    bundles_before: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class RoundTrace:
    order: tuple[int, ...]
    deactivations: tuple[Deactivation, ...]
    final_active: tuple[int, ...]


def fractional_bid_and_take(inst: Instance) -> tuple[FracAllocation, RoundTrace]:
    n, m = inst.n, inst.m
    chores = inst.is_chores
    totals = [inst.total(i) for i in range(n)]
    if chores and any(t == 0 for t in totals):
        bad = [i + 1 for i, t in enumerate(totals) if t == 0]
        raise DegenerateAgent(f"agents {bad} have zero total cost; selection ratio undefined")
    shares = [proportional_share(inst, i) for i in range(n)]
    x = [[ZERO] * m for _ in range(n)]
    load = [ZERO] * n
    active = list(range(n))
    events: list[Deactivation] = []

    def ratio(i: int, e: int) -> Fraction:
        return inst.matrix[i][e] / totals[i] if totals[i] else ZERO

    j = 0
    remaining = Fraction(1)
    while j < m:
        if not active:
            raise FairDivisionError("no active agent left; weighted share invariant broken")
        if chores:
            i = min(active, key=lambda a: (ratio(a, j), a))
        else:
            i = min(active, key=lambda a: (-ratio(a, j), a))
        c = inst.matrix[i][j]
        if load[i] + remaining * c > shares[i]:
            take = (shares[i] - load[i]) / c
            events.append(
                Deactivation(i, j, take, tuple(active), tuple(tuple(r) for r in x))
            )
            x[i][j] += take
            load[i] += take * c
            remaining -= take
            active.remove(i)
            logger.debug("agent %d leaves at item %d holding %s of it", i + 1, j + 1, take)
            if not chores and len(active) == 1:
                last = active[0]
                for e in range(j, m):
                    share = remaining if e == j else Fraction(1)
                    x[last][e] += share
                    load[last] += share * inst.matrix[last][e]
                j = m
        else:
            x[i][j] += remaining
            load[i] += remaining * c
            remaining = Fraction(1)
            j += 1
    trace = RoundTrace(tuple(range(m)), tuple(events), tuple(active))
    return FracAllocation(tuple(tuple(r) for r in x), provenance=trace), trace


def round_largest_fraction(frac: FracAllocation, inst: Instance) -> RoundingOutcome:
    """Give each fractional item to its largest holder (lowest index on ties)."""
    owners = []
    receivers = []
    vector = []
    for e in range(inst.m):
        holders = frac.sharers(e)
        best = max(holders, key=lambda i: (frac.x[i][e], -i))
        owners.append(best)
        if len(holders) >= 2:
            receivers.append((e, best))
            vector.append(int(best == holders[0]))
    alloc = Allocation.from_owners(owners, inst.n)
    return RoundingOutcome(
        alloc, min_subsidy_vector(inst, alloc), Scheme.LARGEST_FRACTION,
        tuple(receivers), tuple(vector),
    )


def fractional_charge(frac: FracAllocation) -> Fraction:
    """Sum over fractional items of (k - 1)/k, k the number of holders."""
    total = ZERO
    for e in frac.fractional_items():
        k = len(frac.sharers(e))
        total += Fraction(k - 1, k)
    return total
