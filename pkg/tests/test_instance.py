import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import PRINTED, SALBP_12, stations
from tdalbp.instance import (Instance, InstanceError, ParseError, Solution, activation_subsets,
                             format_instance, metrics, parse_instance, parse_solution,
                             transitive_sets, validate_solution)


def test_example2_shape(ex2):
    assert ex2.n == 23
    assert ex2.divisible_ids == [2, 3, 9, 13, 14, 18]
    assert ex2.total_time == 100
    assert not ex2.has_dummy_terminal
    assert [ex2.final_time(3, q) for q in (1, 2, 3)] == [7, 5, 4]


def test_single_task_needs_no_dummy():
    inst = Instance.build([5], [], 10)
    assert inst.n == 1


def test_dummy_terminal_for_several_sinks():
    inst = Instance.build([3, 4], [], 10)
    assert inst.n == 3 and inst.has_dummy_terminal
    assert inst.time(3) == 0 and inst.predecessors[3] == (1, 2)
    assert inst.label(3) == "dummy"


def test_dummy_terminal_for_divisible_sink():
    inst = Instance.build([3, 6], [(1, 2)], 10, {2: [(3, 1), (3, 1)]})
    assert inst.has_dummy_terminal and inst.division(inst.terminal) is None


def test_topological_renumbering_keeps_labels():
    inst = Instance.build({1: 2, 2: 3, 3: 4}, [(3, 1), (1, 2)], 10)
    assert inst.arcs == ((1, 2), (2, 3))
    assert [inst.label(j) for j in (1, 2, 3)] == ["3", "1", "2"]
    assert [inst.time(j) for j in (1, 2, 3)] == [4, 2, 3]


@pytest.mark.parametrize("times, arcs, c, divs, msg", [
    ([3, 4], [(1, 2), (2, 1)], 10, None, "cycle"),
    ([3, 4], [(1, 2), (1, 2)], 10, None, "duplicate"),
    ([0, 4], [], 10, None, ">= 1"),
    ([3, 11], [(1, 2)], 10, None, "cycle time"),
    ([3, 6], [(1, 2)], 10, {2: [(5, 1)]}, "outside"),
    ([3, 6], [(1, 2)], 10, {2: [(3, 0), (3, 1)]}, "penalty"),
    ([3, 12], [(1, 2)], 10, {2: [(10, 1), (2, 1)]}, "no division"),
])
def test_build_rejects(times, arcs, c, divs, msg):
    with pytest.raises(InstanceError, match=msg):
        Instance.build(times, arcs, c, divs)


def test_oversize_divisible_task_accepted():
    inst = Instance.build([3, 12], [(1, 2)], 10, {2: [(7, 1), (5, 1)]})
    assert inst.time(2) == 12


def test_transitive_sets(ex2):
    ts = transitive_sets(ex2)
    assert ts[23][0] == frozenset(range(1, 23))
    assert ts[1][0] == frozenset()
    assert ts[23][1] == frozenset()
    chain = Instance.build([1, 1, 1], [(1, 2), (2, 3)], 5)
    assert transitive_sets(chain)[1][1] == {2, 3}


def test_activation_subsets():
    assert activation_subsets([3, 3], 6) == [(0, 1)]
    assert activation_subsets([4, 3], 6) == []
    assert sorted(activation_subsets([3, 2, 1], 3)) == [(0,), (1, 2)]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 8), min_size=1, max_size=6), st.integers(2, 20))
def test_activation_subsets_match_exhaustive(subs, total):
    from itertools import combinations
    want = sorted(c for k in range(1, len(subs) + 1) for c in combinations(range(len(subs)), k)
                  if sum(subs[i] for i in c) == total)
    assert sorted(activation_subsets(subs, total)) == want


def test_printed_solutions_valid(ex2, ex2_salbp):
    sol = Solution.from_stations(ex2_salbp, stations(SALBP_12))
    assert validate_solution(ex2_salbp, sol).ok and sol.m == 12
    for f, text in PRINTED.items():
        sol = Solution.from_stations(ex2, stations(text))
        assert validate_solution(ex2, sol).ok, f
        assert (sol.m, sol.penalty_total) == (11, f)


def test_validator_reports_every_clause(ex2):
    loads = stations(PRINTED[4])
    loads[2] = [(5, 1)]          # drop 3^3: division sum 4 != 7
    loads[0] = [(2, 1), (4, 1), (12, 1)]  # 12 early and a 10-unit station
    report = validate_solution(ex2, Solution.from_stations(ex2, loads))
    assert {"division", "precedence", "assignment"} <= report.clauses()


def test_validator_cycle_and_empty(ex2_salbp):
    loads = stations(SALBP_12)
    loads[0] = [(1, 1), (2, 1)]  # 11 > 10
    loads[1] = [(4, 1)]
    report = validate_solution(ex2_salbp, Solution.from_stations(ex2_salbp, loads))
    assert "cycle" in report.clauses()
    report = validate_solution(ex2_salbp, Solution.from_stations(ex2_salbp, loads[:1] + [[]]))
    assert "empty" in report.clauses()


def test_validator_subtasks_share_station(ex2):
    loads = stations(PRINTED[4])
    loads[1] = [(1, 1), (3, 2), (3, 3)]
    loads[2] = [(5, 1)]
    report = validate_solution(ex2, Solution.from_stations(ex2, loads))
    assert "division" in report.clauses()


def test_metrics():
    one = Instance.build([10], [], 10)
    assert metrics(one, Solution.from_stations(one, [[(1, 1)]])) == (100.0, 10)
    inst = Instance.build([30] * 11 + [23], [(k, k + 1) for k in range(1, 12)], 30)
    sol = Solution.from_stations(inst, [[(k, 1)] for k in range(1, 13)])
    le, lt = metrics(inst, sol)
    assert lt == 353 and round(le, 2) == round(100 * 353 / 360, 2)


def test_metrics_rejects_invalid(ex2_salbp):
    with pytest.raises(InstanceError):
        metrics(ex2_salbp, Solution.from_stations(ex2_salbp, [[(1, 1)]]))


def test_le_counts_penalties(ex2):
    sol = Solution.from_stations(ex2, stations(PRINTED[8]))
    le, _ = metrics(ex2, sol)
    assert le == pytest.approx(100 * 108 / 110)


def test_parse_alb_and_errors():
    text = "3\n1 4\n2 5\n3 6\n1,2\n1,3\n-1,-1\n"
    inst = parse_instance(text, "alb", cycle_time=10)
    assert inst.n == 4 and inst.has_dummy_terminal
    with pytest.raises(ParseError, match="line 2"):
        parse_instance("2\nx\n1 5\n-1,-1\n", "alb", 10)
    with pytest.raises(ParseError, match="unknown task"):
        parse_instance("2\n1 3\n2 4\n1,5\n-1,-1\n", "alb", 10)
    with pytest.raises(ParseError, match="tdalb"):
        parse_instance("1\n1 5\n-1,-1\nDIVISIONS\n1 : 2/1 ; 1/1\n", "alb", 10)
    with pytest.raises(InstanceError, match="cycle time"):
        parse_instance("1\n1 5\n-1,-1\n", "alb")
    with pytest.raises(ParseError, match="nonincreasing"):
        parse_instance("1\n1 5\n-1,-1\nDIVISIONS\n1 : 1/1 ; 2/1\n", "tdalb", 10)


def test_parse_sectioned_benchmark_layout():
    text = """<number of tasks>
3
<cycle time>
9
<task times>
1 4
2 5
3 3
<precedence relations>
1,2
2,3
<end>
"""
    inst = parse_instance(text)
    assert (inst.n, inst.cycle_time, inst.total_time) == (3, 9, 12)


def test_format_roundtrip(ex2):
    text = format_instance(ex2)
    again = parse_instance(text, "tdalb")
    assert again == ex2
    assert format_instance(again) == text


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_roundtrip_random(data):
    n = data.draw(st.integers(1, 8))
    times = data.draw(st.lists(st.integers(1, 9), min_size=n, max_size=n))
    arcs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
            if data.draw(st.booleans())]
    divs = {}
    for j in range(1, n + 1):
        if times[j - 1] >= 3 and data.draw(st.booleans()):
            divs[j] = [(data.draw(st.integers(1, times[j - 1] - 2)), 1)]
    inst = Instance.build(times, arcs, 9, divs)
    back = parse_instance(format_instance(inst), "tdalb")
    assert back == inst


def test_parse_solution_tokens():
    assert parse_solution("S1: 2 3^2\nS2: 1, 4\n# note\n") == [[(2, 1), (3, 2)], [(1, 1), (4, 1)]]
    with pytest.raises(ParseError):
        parse_solution("S1: a")
