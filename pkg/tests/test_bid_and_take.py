from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from fairsubsidy.bid_and_take import (
    DegenerateAgent,
    fractional_bid_and_take,
    fractional_charge,
    round_largest_fraction,
)
from fairsubsidy.core import FracAllocation, Instance, proportional_share
from fairsubsidy.instances import gen_random

from helpers import weighted_no_cut


def test_weighted_two_agents_trace():
    inst = weighted_no_cut()
    frac, trace = fractional_bid_and_take(inst)
    assert [list(r) for r in frac.x] == [
        [0, 1, 1, 1, 1, F(3, 10), 0],
        [1, 0, 0, 0, 0, F(7, 10), 1],
    ]
    assert frac.value(inst, 0) == F(43, 40) == proportional_share(inst, 0)
    assert frac.value(inst, 1) <= proportional_share(inst, 1)
    (event,) = trace.deactivations
    assert (event.agent, event.item, event.fraction) == (0, 5, F(3, 10))
    assert trace.final_active == (1,)


def test_weighted_two_agents_rounding():
    inst = weighted_no_cut()
    out = round_largest_fraction(fractional_bid_and_take(inst)[0], inst)
    assert out.allocation.bundles == ((1, 2, 3, 4), (0, 5, 6))
    assert out.subsidies.s == (0, 0)
    assert out.receivers == ((5, 1),)


def test_single_agent():
    inst = Instance.build([["1/2", 1]])
    frac, trace = fractional_bid_and_take(inst)
    assert frac.x == ((1, 1),)
    assert frac.value(inst, 0) == proportional_share(inst, 0)
    assert trace.deactivations == ()


def test_zero_total_chores_agent_rejected():
    with pytest.raises(DegenerateAgent):
        fractional_bid_and_take(Instance.build([[1, 1], [0, 0]]))


def test_zero_total_goods_agent_never_bids():
    inst = Instance.build([[1, 1], [0, 0]], mode="goods")
    frac, trace = fractional_bid_and_take(inst)
    # agent 1 wins e1 and is then satisfied; the leftover falls to agent 2
    assert frac.x == ((1, 0), (0, 1))
    assert trace.deactivations[0].agent == 0


def test_goods_last_active_agent_takes_the_rest():
    inst = Instance.build([[1, 1, 1], [1, 1, 1]], mode="goods")
    frac, trace = fractional_bid_and_take(inst)
    assert frac.x == ((1, F(1, 2), 0), (0, F(1, 2), 1))
    assert trace.final_active == (1,)


def test_equal_three_way_split_goes_to_lowest_index():
    inst = Instance.build([[1]] * 3)
    frac = FracAllocation(((F(1, 3),),) * 3)
    out = round_largest_fraction(frac, inst)
    assert out.allocation.bundles == ((0,), (), ())
    assert out.total == F(2, 3) <= fractional_charge(frac) == F(2, 3)


def test_integral_input_unchanged():
    inst = Instance.build([[0, 1], [1, 0]])
    frac = FracAllocation(((1, 0), (0, 1)))
    out = round_largest_fraction(frac, inst)
    assert out.allocation.bundles == ((0,), (1,))
    assert out.receivers == () and out.total == 0


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 8), st.integers(0, 12), st.integers(0, 10**6), st.sampled_from(["chores", "goods"]))
def test_wprop_and_half_bound(n, m, seed, mode):
    inst = gen_random(n, m, seed, "weighted", mode)
    if inst.is_chores and any(inst.total(i) == 0 for i in range(n)):
        return
    frac, trace = fractional_bid_and_take(inst)
    for i in range(n):
        v, share = frac.value(inst, i), proportional_share(inst, i)
        assert v <= share if inst.is_chores else v >= share
    assert len(frac.fractional_items()) <= max(n - 1, 0)
    assert len(trace.deactivations) <= n - 1
    if inst.is_chores:
        for ev in trace.deactivations:
            assert frac.value(inst, ev.agent) == proportional_share(inst, ev.agent)
            # the leaving agent's bundle looks at least as costly, relative to
            # total, to every agent still active
            i = ev.agent
            bundle = list(ev.bundles_before[i])
            bundle[ev.item] += ev.fraction
            mine = sum(x * c for x, c in zip(bundle, inst.matrix[i])) / inst.total(i)
            for j in ev.active_before:
                theirs = sum(x * c for x, c in zip(bundle, inst.matrix[j])) / inst.total(j)
                assert theirs >= mine
    out = round_largest_fraction(frac, inst)
    out.allocation.check(m)
    assert out.total <= fractional_charge(frac) <= F(n - 1, 2)
