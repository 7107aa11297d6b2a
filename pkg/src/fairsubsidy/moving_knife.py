"""
Moving-knife computation of a fractional proportional allocation.

The m items are laid out on the line (0, m], item e covering (e, e+1]. A
knife sweeps rightwards from the current left end l. For chores each agent
marks the furthest point whose interval cost stays within her share and the
agent marking furthest takes the piece; for goods each agent marks the
nearest point reaching her share and the agent marking nearest takes it.
Knife positions are solved exactly, one linear equation per boundary item.
"""
from __future__ import annotations

import logging
from fractions import Fraction

from .core import CutSequence, FairDivisionError, FracAllocation, Instance, proportional_share
from .reduction import is_ido

logger = logging.getLogger(__name__)


class NotIdo(FairDivisionError):
    pass


def _pieces(m: int, left: Fraction, right: Fraction):
    """Yield (item, start, end) for every item overlapping (left, right]."""
    e = int(left)
    while e < m and Fraction(e) < right:
        start = max(left, Fraction(e))
        end = min(right, Fraction(e + 1))
        if end > start:
            yield e, start, end
        e += 1


def interval_value(inst: Instance, i: int, left, right) -> Fraction:
    """Cost (or value) of the interval (left, right] to agent i."""
    left, right = Fraction(left), Fraction(right)
    if not 0 <= left <= right <= inst.m:
        raise FairDivisionError(f"interval ({left}, {right}] outside (0, {inst.m}]")
    row = inst.matrix[i]
    return sum(((end - start) * row[e] for e, start, end in _pieces(inst.m, left, right)), Fraction(0))


def _furthest_within(row, m: int, left: Fraction, budget: Fraction) -> Fraction:
    """max{r <= m : cost(left, r) <= budget}."""
    remaining = budget
    for e, start, end in _pieces(m, left, Fraction(m)):
        piece = (end - start) * row[e]
        if piece > remaining:
            return start + remaining / row[e]
        remaining -= piece
    return Fraction(m)


def _nearest_reaching(row, m: int, left: Fraction, target: Fraction) -> Fraction | None:
    """min{r <= m : value(left, r) >= target}, or None if unreachable."""
    if target <= 0:
        return left
    needed = target
    for e, start, end in _pieces(m, left, Fraction(m)):
        piece = (end - start) * row[e]
        if piece >= needed:
            return start + needed / row[e]
        needed -= piece
    return None


def moving_knife(inst: Instance) -> tuple[CutSequence, FracAllocation]:
    """Run the knife on an IDO instance; returns the cuts and the induced
    fractional allocation. Ties go to the lowest agent index."""
    if not is_ido(inst):
        raise NotIdo("moving_knife needs an identical-ordering instance; apply to_ido first")
    if inst.is_weighted:
        raise FairDivisionError("moving_knife computes unweighted proportional shares only")
    m = inst.m
    shares = [proportional_share(inst, i) for i in range(inst.n)]
    active = list(range(inst.n))
    left = Fraction(0)
    order: list[int] = []
    cuts: list[Fraction] = []
    if inst.is_chores:
        while left != m:
            if not active:
                raise FairDivisionError("agents exhausted before the line was covered")
            marks = {i: _furthest_within(inst.matrix[i], m, left, shares[i]) for i in active}
            # last shouter: largest mark, lowest index on ties
            taker = max(active, key=lambda i: (marks[i], -i))
            left = marks[taker]
            logger.debug("agent %d takes up to %s", taker + 1, left)
            order.append(taker)
            cuts.append(left)
            active.remove(taker)
    else:
        while len(active) >= 2:
            marks = {i: _nearest_reaching(inst.matrix[i], m, left, shares[i]) for i in active}
            if all(r is None for r in marks.values()):
                raise FairDivisionError("no agent can reach her share; invariant broken")
            taker = min(
                (i for i in active if marks[i] is not None), key=lambda i: (marks[i], i)
            )
            left = marks[taker]
            order.append(taker)
            cuts.append(left)
            active.remove(taker)
        if active:
            order.append(active[0])
            cuts.append(Fraction(m))
            active.clear()
    # agents never reached hold an empty interval at the right end
    order.extend(active)
    cuts.extend([Fraction(m)] * len(active))
    cut_seq = CutSequence(tuple(cuts[:-1]), tuple(order), m)
    return cut_seq, cut_seq.to_fractions()
