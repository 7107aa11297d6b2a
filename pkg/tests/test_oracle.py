from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from fairsubsidy.core import Instance
from fairsubsidy.envy import efs_solve
from fairsubsidy.instances import gen_lower_bound_efs, gen_lower_bound_prop, gen_random
from fairsubsidy.oracle import TooLarge, oracle_min_total_efs_subsidy, oracle_min_total_subsidy
from fairsubsidy.verify import min_subsidy_vector

from helpers import brute_min_prop_subsidy


def test_single_unit_item_two_agents():
    value, witness = oracle_min_total_subsidy(Instance.build([[1], [1]]))
    assert value == F(1, 2)
    witness.check(1)


@pytest.mark.parametrize("n, expected", [(2, F(1, 2)), (3, F(2, 3)), (4, F(1)), (5, F(6, 5))])
@pytest.mark.parametrize("mode", ["chores", "goods"])
def test_lower_bound_family(n, expected, mode):
    value, witness = oracle_min_total_subsidy(gen_lower_bound_prop(n, mode))
    assert value == expected
    assert min_subsidy_vector(gen_lower_bound_prop(n, mode), witness).total == value


def test_efs_lower_bound_three():
    assert oracle_min_total_efs_subsidy(gen_lower_bound_efs(3)) == 2


def test_efs_ef_achievable():
    assert oracle_min_total_efs_subsidy(Instance.build([[1, 0], [0, 1]])) == 0


def test_cap():
    with pytest.raises(TooLarge):
        oracle_min_total_subsidy(gen_random(4, 9, 0), cap=1000)
    with pytest.raises(TooLarge):
        oracle_min_total_efs_subsidy(gen_random(4, 9, 0), cap=1000)


def test_efs_oracle_goods_rejected():
    with pytest.raises(ValueError):
        oracle_min_total_efs_subsidy(Instance.build([[1]], mode="goods"))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(0, 5), st.integers(0, 10**6),
       st.sampled_from(["uniform", "bimodal", "weighted"]), st.sampled_from(["chores", "goods"]))
def test_pruned_search_matches_plain_enumeration(n, m, seed, family, mode):
    inst = gen_random(n, m, seed, family, mode)
    value, witness = oracle_min_total_subsidy(inst)
    assert value == brute_min_prop_subsidy(inst)
    assert min_subsidy_vector(inst, witness).total == value


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 3), st.integers(1, 4), st.integers(0, 10**6))
def test_efs_oracle_below_algorithm(n, m, seed):
    inst = gen_random(n, m, seed)
    assert oracle_min_total_efs_subsidy(inst) <= efs_solve(inst)[1].total
