"""Load balancing for agents with identical cost functions (chores)."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .core import Allocation, FairDivisionError, Instance, proportional_share

logger = logging.getLogger(__name__)


class NotIdentical(FairDivisionError):
    pass


@dataclass(frozen=True)
class LoadBalanceTrace:
    """``order`` lists items in the order they were handed out; ``last_item[i]``
    is the final item agent i received (None for an empty bundle)."""

    order: tuple[int, ...]
    recipients: tuple[int, ...]
    last_item: tuple[int | None, ...]


def _require_identical_chores(inst: Instance) -> tuple[Fraction, ...]:
    if not inst.is_chores:
        raise FairDivisionError("load balancing is defined for chores only")
    if not inst.is_identical():
        raise NotIdentical("agents' cost rows differ")
    return inst.matrix[0]


def _greedy(inst: Instance, score) -> tuple[Allocation, LoadBalanceTrace]:
    cost = _require_identical_chores(inst)
    order = sorted(range(inst.m), key=lambda e: -cost[e])
    loads = [Fraction(0)] * inst.n
    owners = [0] * inst.m
    recipients = []
    last: list[int | None] = [None] * inst.n
    for e in order:
        # max() keeps the first maximiser, i.e. the lowest agent index
        i = max(range(inst.n), key=lambda a: score(a, loads[a]))
        loads[i] += cost[e]
        owners[e] = i
        last[i] = e
        recipients.append(i)
        logger.debug("item %d -> agent %d (load %s)", e + 1, i + 1, loads[i])
    trace = LoadBalanceTrace(tuple(order), tuple(recipients), tuple(last))
    return Allocation.from_owners(owners, inst.n), trace


def load_balance(inst: Instance) -> tuple[Allocation, LoadBalanceTrace]:
    """Hand items out from most to least costly, each to the currently least
    loaded agent. The result is PROPX."""
    if inst.is_weighted:
        raise FairDivisionError("load_balance expects uniform weights; use weighted_load_balance")
    return _greedy(inst, lambda a, load: -load)


def weighted_load_balance(inst: Instance) -> tuple[Allocation, LoadBalanceTrace]:
    """Same greedy order, but each item goes to the agent with the largest
    remaining slack ``WPROP_i - c(X_i)``. The result is WPROPX."""
    _require_identical_chores(inst)
    shares = [proportional_share(inst, i) for i in range(inst.n)]
    return _greedy(inst, lambda a, load: shares[a] - load)


def identical_bound(n: int) -> Fraction:
    """n/4 for even n, (n^2 - 1)/(4n) for odd n.

    >>> identical_bound(4), identical_bound(3)
    (Fraction(1, 1), Fraction(2, 3))
    """
    if n % 2 == 0:
        return Fraction(n, 4)
    return Fraction(n * n - 1, 4 * n)
