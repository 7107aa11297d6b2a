"""
Exact data model shared by every algorithm: instances, integral and
fractional allocations, knife cut sequences and subsidy vectors.

All quantities are :class:`fractions.Fraction`; no floating point enters
the value path. Items are 0-based internally and printed 1-based.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class FairDivisionError(ValueError):
    """Base class for every error raised by this package."""


class InvalidInstance(FairDivisionError):
    pass


class OutOfRange(InvalidInstance):
    pass


class BadWeights(InvalidInstance):
    pass


class DimensionMismatch(InvalidInstance):
    pass


class Mode(str, enum.Enum):
    CHORES = "chores"
    GOODS = "goods"


def to_rational(value: RationalLike) -> Fraction:
    """Convert an int, Fraction, decimal string or ``"p/q"`` string exactly.

    >>> to_rational("0.43")
    Fraction(43, 100)
    >>> to_rational("3/12")
    Fraction(1, 4)

    Floats are rejected so that binary rounding never leaks in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInstance(f"cannot parse rational {value!r}") from exc
    raise TypeError(f"expected int, Fraction or str, got {type(value).__name__}")


def format_rational(q: Fraction, decimal: bool = False) -> str:
    text = str(q)
    if decimal and q.denominator != 1:
        text += f" (~{float(q):.6g})"
    return text


@dataclass(frozen=True)
class Instance:
    """An allocation problem: ``matrix[i][e]`` is agent i's cost (chores)
    or value (goods) for item e."""

    mode: Mode
    matrix: tuple[tuple[Fraction, ...], ...]
    weights: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def m(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def is_chores(self) -> bool:
        return self.mode is Mode.CHORES

    @property
    def is_weighted(self) -> bool:
        return any(w != Fraction(1, self.n) for w in self.weights)

    def total(self, i: int) -> Fraction:
        return sum(self.matrix[i], Fraction(0))

    def is_identical(self) -> bool:
        return all(row == self.matrix[0] for row in self.matrix)

    def with_matrix(self, matrix: Sequence[Sequence[Fraction]]) -> "Instance":
        return Instance(self.mode, tuple(tuple(r) for r in matrix), self.weights)

    @classmethod
    def build(
        cls,
        costs: Sequence[Sequence[RationalLike]],
        mode: Union[Mode, str] = Mode.CHORES,
        weights: Sequence[RationalLike] | None = None,
    ) -> "Instance":
        """Convert raw numbers and validate. Omitted weights mean 1/n each."""
        matrix = tuple(tuple(to_rational(v) for v in row) for row in costs)
        n = len(matrix)
        if n == 0:
            raise DimensionMismatch("an instance needs at least one agent")
        if weights is None:
            w = tuple(Fraction(1, n) for _ in range(n))
        else:
            w = tuple(to_rational(v) for v in weights)
        return validate_instance(cls(Mode(mode), matrix, w))


def validate_instance(raw: Instance) -> Instance:
    """Return ``raw`` unchanged if every invariant holds, otherwise raise."""
    n = len(raw.matrix)
    if n < 1:
        raise DimensionMismatch("an instance needs at least one agent")
    m = len(raw.matrix[0])
    for i, row in enumerate(raw.matrix):
        if len(row) != m:
            raise DimensionMismatch(f"row {i + 1} has {len(row)} entries, expected {m}")
        for e, v in enumerate(row):
            if not isinstance(v, Fraction):
                raise InvalidInstance(f"entry ({i + 1},{e + 1}) is not a Fraction")
            if v < 0 or v > 1:
                raise OutOfRange(f"entry ({i + 1},{e + 1}) = {v} outside [0,1]")
    if len(raw.weights) != n:
        raise DimensionMismatch(f"{len(raw.weights)} weights for {n} agents")
    if any(w <= 0 for w in raw.weights):
        raise BadWeights("weights must be strictly positive")
    if sum(raw.weights, Fraction(0)) != 1:
        raise BadWeights(f"weights sum to {sum(raw.weights)}, not 1")
    return raw


def proportional_share(inst: Instance, i: int) -> Fraction:
    """``w_i * c_i(M)``; equals ``c_i(M)/n`` for unweighted instances."""
    return inst.weights[i] * inst.total(i)


def bundle_value(inst: Instance, i: int, bundle: Iterable[int] | Sequence[Fraction]) -> Fraction:
    """Additive cost/value of an item set, or of a fraction row of length m."""
    items = list(bundle)
    row = inst.matrix[i]
    if items and isinstance(items[0], Fraction) and len(items) == inst.m:
        return sum((x * c for x, c in zip(items, row)), Fraction(0))
    return sum((row[e] for e in items), Fraction(0))


@dataclass(frozen=True)
class Allocation:
    """Integral allocation; ``bundles[i]`` is the sorted tuple of agent i's items."""

    bundles: tuple[tuple[int, ...], ...]

    @classmethod
    def from_owners(cls, owners: Sequence[int], n: int) -> "Allocation":
        bundles: list[list[int]] = [[] for _ in range(n)]
        for e, i in enumerate(owners):
            bundles[i].append(e)
        return cls(tuple(tuple(b) for b in bundles))

    @classmethod
    def from_bundles(cls, bundles: Iterable[Iterable[int]]) -> "Allocation":
        return cls(tuple(tuple(sorted(b)) for b in bundles))

    @property
    def n(self) -> int:
        return len(self.bundles)

    def owners(self, m: int) -> list[int]:
        owner = [-1] * m
        for i, b in enumerate(self.bundles):
            for e in b:
                owner[e] = i
        return owner

    def check(self, m: int) -> None:
        seen: set[int] = set()
        for b in self.bundles:
            for e in b:
                if e in seen:
                    raise FairDivisionError(f"item {e + 1} allocated twice")
                if not 0 <= e < m:
                    raise FairDivisionError(f"item {e + 1} does not exist")
                seen.add(e)
        if len(seen) != m:
            missing = sorted(set(range(m)) - seen)
            raise FairDivisionError(f"items {[e + 1 for e in missing]} unallocated")

    def to_json(self) -> list[list[int]]:
        return [[e + 1 for e in b] for b in self.bundles]


@dataclass(frozen=True)
class SubsidyVector:
    s: tuple[Fraction, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.s):
            raise FairDivisionError("subsidies must be nonnegative")

    @property
    def total(self) -> Fraction:
        return sum(self.s, Fraction(0))

    def __iter__(self):
        return iter(self.s)

    def __getitem__(self, i: int) -> Fraction:
        return self.s[i]

    def __len__(self) -> int:
        return len(self.s)


@dataclass(frozen=True)
class CutSequence:
    """Knife positions over the item line ``(0, m]``.

    ``order[k]`` is the agent owning the k-th interval
    ``(cuts[k-1], cuts[k]]`` with ``cuts[-1] = 0`` and ``cuts[n-1] = m``.
    Item e occupies ``(e, e+1]``.
    """

    cuts: tuple[Fraction, ...]
    order: tuple[int, ...]
    m: int

    def __post_init__(self):
        if len(self.cuts) != len(self.order) - 1:
            raise FairDivisionError("need exactly n-1 cuts for n agents")
        prev = Fraction(0)
        for r in self.cuts:
            if r < prev or r > self.m:
                raise FairDivisionError("cut positions must be non-decreasing within [0, m]")
            prev = r
        if sorted(self.order) != list(range(len(self.order))):
            raise FairDivisionError("order must be a permutation of the agents")

    def interval(self, k: int) -> tuple[Fraction, Fraction]:
        left = self.cuts[k - 1] if k > 0 else Fraction(0)
        right = self.cuts[k] if k < len(self.cuts) else Fraction(self.m)
        return left, right

    def intervals(self) -> list[tuple[int, Fraction, Fraction]]:
        return [(agent, *self.interval(k)) for k, agent in enumerate(self.order)]

    def to_fractions(self) -> "FracAllocation":
        n = len(self.order)
        x = [[Fraction(0)] * self.m for _ in range(n)]
        for agent, left, right in self.intervals():
            for e in range(int(left), min(self.m, -(-right.numerator // right.denominator))):
                overlap = min(right, Fraction(e + 1)) - max(left, Fraction(e))
                if overlap > 0:
                    x[agent][e] = overlap
        return FracAllocation(tuple(tuple(r) for r in x), provenance=self)


@dataclass(frozen=True)
class FracAllocation:
    """``x[i][e]`` is the share of item e held by agent i; columns sum to 1."""

    x: tuple[tuple[Fraction, ...], ...]
    provenance: object = field(default=None, compare=False)

    def __post_init__(self):
        if not self.x:
            return
        for e in range(len(self.x[0])):
            column = [row[e] for row in self.x]
            if any(v < 0 or v > 1 for v in column) or sum(column) != 1:
                raise FairDivisionError(f"column of item {e + 1} is not a distribution")

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def m(self) -> int:
        return len(self.x[0]) if self.x else 0

    def sharers(self, e: int) -> list[int]:
        """k(e): agents holding a positive share of item e."""
        return [i for i in range(self.n) if self.x[i][e] > 0]

    def fractional_items(self) -> list[int]:
        return [e for e in range(self.m) if len(self.sharers(e)) >= 2]

    def value(self, inst: Instance, i: int) -> Fraction:
        return bundle_value(inst, i, self.x[i])


def load_instance(path: str) -> Instance:
    with open(path) as fh:
        return instance_from_json(json.load(fh))


def instance_from_json(obj: dict) -> Instance:
    if not isinstance(obj, dict) or "costs" not in obj:
        raise InvalidInstance("instance object needs a 'costs' field")
    for row in obj["costs"]:
        for v in row:
            if isinstance(v, float):
                raise InvalidInstance("numbers must be given as strings or integers, not floats")
    return Instance.build(obj["costs"], obj.get("mode", "chores"), obj.get("weights"))


def instance_to_json(inst: Instance) -> dict:
    obj: dict = {"mode": inst.mode.value}
    if inst.is_weighted:
        obj["weights"] = [str(w) for w in inst.weights]
    obj["costs"] = [[str(v) for v in row] for row in inst.matrix]
    return obj


def save_instance(inst: Instance, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(instance_to_json(inst), fh)
        fh.write("\n")
