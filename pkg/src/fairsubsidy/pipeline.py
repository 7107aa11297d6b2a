"""End-to-end solvers with their guaranteed subsidy bounds, used by the CLI."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bid_and_take import fractional_bid_and_take, round_largest_fraction
from .core import Allocation, FairDivisionError, Instance, SubsidyVector
from .envy import efs_solve
from .identical import identical_bound, load_balance, weighted_load_balance
from .moving_knife import moving_knife
from .reduction import lift_allocation, to_ido
from .rounding import RoundingOutcome, round_best
from .verify import min_subsidy_vector


class Algorithm(str, enum.Enum):
    LOAD_BALANCE = "load-balance"
    WEIGHTED_LOAD_BALANCE = "weighted-load-balance"
    MOVING_KNIFE_ROUND_BEST = "moving-knife-round-best"
    BID_AND_TAKE = "bid-and-take"
    EFS = "efs"


def theorem_bound(algorithm: Algorithm, n: int) -> Fraction:
    if algorithm in (Algorithm.LOAD_BALANCE, Algorithm.WEIGHTED_LOAD_BALANCE):
        return identical_bound(n)
    if algorithm is Algorithm.MOVING_KNIFE_ROUND_BEST:
        return Fraction(n, 4)
    if algorithm is Algorithm.BID_AND_TAKE:
        return Fraction(n - 1, 2)
    return Fraction(n - 1)


@dataclass(frozen=True)
class Solution:
    algorithm: Algorithm
    allocation: Allocation
    subsidies: SubsidyVector
    bound: Fraction
    ido_outcome: Optional[RoundingOutcome] = None

    @property
    def total(self) -> Fraction:
        return self.subsidies.total

    @property
    def passed(self) -> bool:
        return self.total <= self.bound


def solve_prop(inst: Instance) -> tuple[Allocation, SubsidyVector, RoundingOutcome]:
    """Sort to IDO, cut with the knife, round, and lift back to ``inst``."""
    ido, cert = to_ido(inst)
    cuts, _ = moving_knife(ido)
    outcome = round_best(cuts, ido)
    lifted = lift_allocation(outcome.allocation, cert, inst)
    return lifted, min_subsidy_vector(inst, lifted), outcome


def solve(inst: Instance, algorithm: Algorithm | str) -> Solution:
    algorithm = Algorithm(algorithm)
    bound = theorem_bound(algorithm, inst.n)
    if algorithm is Algorithm.LOAD_BALANCE:
        alloc, _ = load_balance(inst)
        return Solution(algorithm, alloc, min_subsidy_vector(inst, alloc), bound)
    if algorithm is Algorithm.WEIGHTED_LOAD_BALANCE:
        alloc, _ = weighted_load_balance(inst)
        return Solution(algorithm, alloc, min_subsidy_vector(inst, alloc), bound)
    if algorithm is Algorithm.MOVING_KNIFE_ROUND_BEST:
        if inst.is_weighted:
            raise FairDivisionError("the moving knife needs uniform weights; use bid-and-take")
        alloc, s, outcome = solve_prop(inst)
        return Solution(algorithm, alloc, s, bound, outcome)
    if algorithm is Algorithm.BID_AND_TAKE:
        frac, _ = fractional_bid_and_take(inst)
        outcome = round_largest_fraction(frac, inst)
        return Solution(algorithm, outcome.allocation, outcome.subsidies, bound)
    if not inst.is_chores:
        raise FairDivisionError("envy-freeness with subsidy is implemented for chores only")
    alloc, s = efs_solve(inst)
    return Solution(algorithm, alloc, s, bound)
