"""
Rounding a moving-knife allocation to an integral one.

Every fractional item (one cut through it, or several) is handed whole to a
single agent that already holds part of it:

* up rounding (chores): the earliest sharer in pick order;
* down rounding (goods): the latest sharer;
* threshold rounding: the sharer holding the largest piece, earliest on ties.

``round_best`` keeps the cheaper of the mode's directional rounding and the
threshold rounding, which never costs more than n/4 in total.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import Allocation, CutSequence, FairDivisionError, FracAllocation, Instance, SubsidyVector
from .verify import min_subsidy_vector


class Scheme(str, enum.Enum):
    UP = "up"
    DOWN = "down"
    THRESHOLD = "threshold"
    LARGEST_FRACTION = "largest-fraction"


@dataclass(frozen=True)
class FractionalGroup:
    """One fractional item and its holders, listed in pick order."""

    item: int
    sharers: tuple[int, ...]
    shares: tuple[Fraction, ...]

    @property
    def times_cut(self) -> int:
        return len(self.sharers) - 1

    @property
    def charge(self) -> Fraction:
        # first and last piece as in the single-cut case, plus 1/2 per extra cut
        return min(self.shares[0], self.shares[-1]) + Fraction(self.times_cut - 1, 2)

    def largest_holder(self) -> int:
        best = max(self.shares)
        return self.sharers[self.shares.index(best)]


@dataclass(frozen=True)
class RoundingOutcome:
    allocation: Allocation
    subsidies: SubsidyVector
    scheme: Scheme
    receivers: tuple[tuple[int, int], ...]
    rounding_vector: tuple[int, ...]

    @property
    def total(self) -> Fraction:
        return self.subsidies.total


def fractional_groups(cuts: CutSequence, frac: FracAllocation | None = None) -> list[FractionalGroup]:
    if frac is None:
        frac = cuts.to_fractions()
    groups = []
    for e in frac.fractional_items():
        sharers = tuple(a for a in cuts.order if frac.x[a][e] > 0)
        groups.append(FractionalGroup(e, sharers, tuple(frac.x[a][e] for a in sharers)))
    return groups


def _round(cuts: CutSequence, inst: Instance, scheme: Scheme, choose) -> RoundingOutcome:
    if cuts.m != inst.m or len(cuts.order) != inst.n:
        raise FairDivisionError("cut sequence does not match the instance")
    frac = cuts.to_fractions()
    owners = []
    for e in range(inst.m):
        holders = frac.sharers(e)
        owners.append(holders[0])
    receivers = []
    vector = []
    for group in fractional_groups(cuts, frac):
        agent = choose(group)
        owners[group.item] = agent
        receivers.append((group.item, agent))
        vector.append(int(agent == group.sharers[0]))
    alloc = Allocation.from_owners(owners, inst.n)
    return RoundingOutcome(
        alloc, min_subsidy_vector(inst, alloc), scheme, tuple(receivers), tuple(vector)
    )


def round_up(cuts: CutSequence, inst: Instance) -> RoundingOutcome:
    if not inst.is_chores:
        raise FairDivisionError("up rounding applies to chores; use round_down for goods")
    return _round(cuts, inst, Scheme.UP, lambda g: g.sharers[0])


def round_down(cuts: CutSequence, inst: Instance) -> RoundingOutcome:
    if inst.is_chores:
        raise FairDivisionError("down rounding applies to goods; use round_up for chores")
    return _round(cuts, inst, Scheme.DOWN, lambda g: g.sharers[-1])


def round_threshold(cuts: CutSequence, inst: Instance) -> RoundingOutcome:
    return _round(cuts, inst, Scheme.THRESHOLD, FractionalGroup.largest_holder)


def round_directional(cuts: CutSequence, inst: Instance) -> RoundingOutcome:
    return round_up(cuts, inst) if inst.is_chores else round_down(cuts, inst)


def round_best(cuts: CutSequence, inst: Instance) -> RoundingOutcome:
    """Cheaper of directional and threshold rounding; threshold wins ties."""
    directional = round_directional(cuts, inst)
    threshold = round_threshold(cuts, inst)
    return directional if directional.total < threshold.total else threshold
