"""Instance generators: the lower-bound families and seeded random families."""
from __future__ import annotations

import enum
import random
from fractions import Fraction

from .core import Instance, Mode, validate_instance

GRID = 1000


class Family(str, enum.Enum):
    UNIFORM = "uniform"
    BIMODAL = "bimodal"
    IDENTICAL = "identical"
    WEIGHTED = "weighted"

    @classmethod
    def _missing_(cls, value):
        aliases = {
            "uniformrational": cls.UNIFORM,
            "identicaluniform": cls.IDENTICAL,
            "weighteddirichletlike": cls.WEIGHTED,
        }
        if isinstance(value, str):
            key = value.replace("-", "").replace("_", "").lower()
            return aliases.get(key) or next((f for f in cls if f.value == key), None)
        return None


def gen_lower_bound_prop(n: int, mode: Mode | str = Mode.CHORES) -> Instance:
    """floor(n/2) items worth exactly 1 to n identical agents."""
    if n < 2:
        raise ValueError("the lower-bound family needs n >= 2")
    return Instance.build([[1] * (n // 2) for _ in range(n)], mode)


def gen_lower_bound_efs(n: int) -> Instance:
    """n - 1 unit chores for n identical agents."""
    if n < 2:
        raise ValueError("the lower-bound family needs n >= 2")
    return Instance.build([[1] * (n - 1) for _ in range(n)], Mode.CHORES)


def _entry(rng: random.Random, family: Family) -> Fraction:
    if family is Family.BIMODAL:
        k = rng.randint(0, 100) if rng.randint(0, 1) else rng.randint(900, GRID)
    else:
        k = rng.randint(0, GRID)
    return Fraction(min(max(k, 0), GRID), GRID)


def gen_random(
    n: int,
    m: int,
    seed: int,
    family: Family | str = Family.UNIFORM,
    mode: Mode | str = Mode.CHORES,
) -> Instance:
    """Deterministic in (n, m, seed, family, mode); entries are k/1000."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    family = Family(family)
    rng = random.Random(f"{family.value}:{n}:{m}:{seed}")
    if family is Family.IDENTICAL:
        row = [_entry(rng, family) for _ in range(m)]
        matrix = [list(row) for _ in range(n)]
    else:
        matrix = [[_entry(rng, family) for _ in range(m)] for _ in range(n)]
    weights = None
    if family is Family.WEIGHTED:
        raw = [rng.randint(1, GRID) for _ in range(n)]
        weights = [Fraction(r, sum(raw)) for r in raw]
    inst = Instance(
        Mode(mode),
        tuple(tuple(r) for r in matrix),
        tuple(weights) if weights else tuple(Fraction(1, n) for _ in range(n)),
    )
    return validate_instance(inst)


def random_weights(n: int, seed: int) -> tuple[Fraction, ...]:
    """Positive grid weights summing to one, independent of any instance."""
    rng = random.Random(f"weights:{n}:{seed}")
    raw = [rng.randint(1, GRID) for _ in range(n)]
    return tuple(Fraction(r, sum(raw)) for r in raw)
