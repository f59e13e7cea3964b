import pytest

from helpers import battery
from tdalbp.instance import Instance
from tdalbp.oracle import OracleCapError, brute_force


def test_three_full_tasks():
    res = brute_force(Instance.build([10, 10, 10], [], 10))
    assert (res.m_opt, res.min_penalty_among_optima) == (3, 0)


def test_counts_load_sets_not_orders():
    # a chain of two 6s has exactly one layout
    res = brute_force(Instance.build([6, 6], [(1, 2)], 10))
    assert res.count_optima == 1
    res = brute_force(Instance.build([6, 6, 1], [(1, 3), (2, 3)], 10))
    assert res.m_opt == 2 and res.count_optima == 2  # the 1 joins whichever big task is second
    # {1}{2}{3} and {2}{1}{3} hold the same loads
    res = brute_force(Instance.build([6, 6, 10], [(1, 3), (2, 3)], 10))
    assert (res.m_opt, res.count_optima) == (3, 1)


def test_division_optimum_and_penalty():
    # chain 4 -> 8 -> 4 with c = 10 needs three stations unless 8 splits into 4 + 4
    inst = Instance.build([4, 8, 4], [(1, 2), (2, 3)], 10, {2: [(4, 1), (4, 1)]})
    res = brute_force(inst)
    assert res.m_opt == 2 and res.min_penalty_among_optima == 2


def test_cap():
    inst = Instance.build([1] * 19, [], 10)
    with pytest.raises(OracleCapError):
        brute_force(inst)


def test_division_free_instance_matches_base():
    for inst, res, base, base_res, kind in battery():
        if kind == "O":
            continue
        assert brute_force(inst.without_divisions()).m_opt == base_res.m_opt
        assert res.m_opt <= base_res.m_opt


def test_oracle_above_lb1():
    for inst, res, *_ in battery():
        assert res.m_opt >= -(-inst.total_time // inst.cycle_time)
