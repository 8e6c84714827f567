import random

import pytest

from mckp import (
    InfeasibleInstanceError,
    Instance,
    bissa,
    evaluate,
    is_feasible,
    pareto_filter,
    solve_linear,
)

from helpers import linear_sweep_weights, random_instance


class TestSolveLinear:
    def test_full_profit_weight(self, appendix):
        sel = solve_linear(appendix, 1.0)
        assert sel == (1, 0)
        assert evaluate(appendix, sel) == pytest.approx((7.0, -5.0))

    def test_zero_weight_minimizes_cost(self, appendix):
        sel = solve_linear(appendix, 0.0)
        assert sel == (0, 1)
        assert evaluate(appendix, sel) == pytest.approx((4.0, -2.9))

    def test_tie_chain_ends_at_lowest_index(self):
        # equal costs everywhere: scalarization ties at w=0, tie rule keeps
        # the lower cost (also tied) and finally the lower index
        inst = Instance((((1.0, 2.0), (9.0, 2.0)),), budget=3.0)
        assert solve_linear(inst, 0.0) == (0,)

    def test_interior_weights_give_category_pareto_components(self):
        rng = random.Random(3)
        for _ in range(100):
            inst = random_instance(rng)
            w = rng.uniform(1e-6, 1 - 1e-6)
            sel = solve_linear(inst, w)
            for j, i in enumerate(sel):
                assert i in pareto_filter(inst.categories[j], j).pareto_items

    def test_rejects_weight_outside_unit_interval(self, appendix):
        with pytest.raises(ValueError):
            solve_linear(appendix, 1.5)


class TestBissaAppendix:
    def test_straddle(self, appendix):
        res = bissa(appendix)
        assert not res.exact
        assert evaluate(appendix, res.xa) == pytest.approx((6.0, -3.9), abs=1e-12)
        assert evaluate(appendix, res.xb) == pytest.approx((7.0, -5.0), abs=1e-12)
        assert res.gap_cost == pytest.approx(1.1, abs=1e-12)
        assert is_feasible(appendix, res.xa)
        assert not is_feasible(appendix, res.xb)

    def test_endpoints_are_reproducible_from_trace(self, appendix):
        res = bissa(appendix)
        pa = evaluate(appendix, res.xa)
        pb = evaluate(appendix, res.xb)
        seen = [evaluate(appendix, solve_linear(appendix, s.weight)) for s in res.trace]
        assert pa in seen and pb in seen


class TestBissaExactCases:
    def test_slack_budget_returns_max_profit(self):
        inst = Instance((((1, 5), (9, 7)), ((2, 3), (4, 8))), budget=100.0)
        res = bissa(inst)
        assert res.exact
        assert res.certificate == "max-profit-feasible"
        assert res.xb is None and res.gap_cost == 0.0
        assert evaluate(inst, res.xa).f1 == 13.0

    def test_zero_slack_certificate(self):
        # supported selection (item1, item0) costs exactly the budget
        inst = Instance((((1, 1), (5, 4)), ((2, 2), (6, 7))), budget=6.0)
        res = bissa(inst)
        assert res.exact
        assert res.certificate == "zero-slack"
        assert -evaluate(inst, res.xa).f2 == 6.0

    def test_infeasible_instance(self):
        inst = Instance((((1, 5), (2, 6)),), budget=2.0)
        with pytest.raises(InfeasibleInstanceError):
            bissa(inst)


class TestBissaProperties:
    def test_straddle_invariants(self):
        rng = random.Random(11)
        for _ in range(300):
            inst = random_instance(rng)
            try:
                res = bissa(inst)
            except InfeasibleInstanceError:
                continue
            if res.exact:
                assert is_feasible(inst, res.xa)
                continue
            pa = evaluate(inst, res.xa)
            pb = evaluate(inst, res.xb)
            assert is_feasible(inst, res.xa)
            assert not is_feasible(inst, res.xb)
            assert pa.f1 < pb.f1
            assert pa.f2 > pb.f2
            assert res.gap_cost == pytest.approx(pa.f2 - pb.f2)
            assert res.gap_cost > 0
            for j in range(inst.m):
                frontier = pareto_filter(inst.categories[j], j).pareto_items
                assert res.xa[j] in frontier
                assert res.xb[j] in frontier

    def test_xa_best_feasible_reachable_by_weight_sweep(self):
        # sweeping every argmax-switching weight enumerates everything
        # solve_linear can ever return; the feasible best must match xa
        rng = random.Random(12)
        checked = 0
        for _ in range(200):
            inst = random_instance(rng)
            try:
                res = bissa(inst)
            except InfeasibleInstanceError:
                continue
            reachable = {solve_linear(inst, w) for w in linear_sweep_weights(inst)}
            feasible_profits = [
                evaluate(inst, sel).f1 for sel in reachable if is_feasible(inst, sel)
            ]
            if res.exact:
                assert evaluate(inst, res.xa).f1 == pytest.approx(max(feasible_profits))
                continue
            checked += 1
            assert evaluate(inst, res.xa).f1 == pytest.approx(max(feasible_profits))
            # and xb is the cheapest infeasible point above xa on the hull walk
            infeasible_costs = [
                -evaluate(inst, sel).f2
                for sel in reachable
                if not is_feasible(inst, sel)
            ]
            assert -evaluate(inst, res.xb).f2 == pytest.approx(min(infeasible_costs))
        assert checked > 50

    def test_collinear_hull_edge_stops_at_tie_representative(self):
        # all three items sit on one hull segment; at the shared breakpoint
        # the tie rule yields the cheapest selection, so the bisection stops
        # with the endpoints and never oscillates across the segment
        inst = Instance((((0.0, 0.0), (1.0, 1.0), (2.0, 2.0)),), budget=1.5)
        res = bissa(inst)
        assert not res.exact
        assert res.xa == (0,)
        assert res.xb == (2,)
        # the middle item is never produced by any weight, so xa is still the
        # best reachable feasible selection
        reachable = {solve_linear(inst, w) for w in linear_sweep_weights(inst)}
        assert (1,) not in reachable

    def test_all_zero_profits(self):
        inst = Instance((((0, 3), (0, 1)), ((0, 2), (0, 5))), budget=4.0)
        res = bissa(inst)
        assert res.exact  # max-profit tie rule lands on the cheapest selection
        assert evaluate(inst, res.xa).f1 == 0.0
        assert is_feasible(inst, res.xa)

    def test_exact_iff_boundary_cases(self):
        rng = random.Random(13)
        exact_seen = 0
        for _ in range(100):
            inst = random_instance(rng, budget_ratio=1.0)
            res = bissa(inst)
            assert res.exact  # budget covers the costliest selection
            exact_seen += 1
        assert exact_seen == 100

    def test_trace_weights_stay_bracketed(self):
        rng = random.Random(14)
        for _ in range(100):
            inst = random_instance(rng)
            try:
                res = bissa(inst)
            except InfeasibleInstanceError:
                continue
            assert len(res.trace) <= 200
            for step in res.trace:
                assert 0.0 <= step.weight <= 1.0

    def test_xa_best_reachable_at_benchmark_scale(self):
        from mckp import Correlation, GenSpec, generate

        for seed in (1, 2, 3):
            inst = generate(
                GenSpec(m=20, n=20, correlation=Correlation.WEAK, seed=seed)
            )
            res = bissa(inst)
            best_feasible = max(
                evaluate(inst, sel).f1
                for sel in {solve_linear(inst, w) for w in linear_sweep_weights(inst)}
                if is_feasible(inst, sel)
            )
            assert evaluate(inst, res.xa).f1 == pytest.approx(best_feasible)

    def test_probe_count_bounded_by_supported_pairs(self):
        # every probe except the two seeds and the terminal repeat discovers
        # a new supported objective pair
        rng = random.Random(15)
        for _ in range(150):
            inst = random_instance(rng)
            try:
                res = bissa(inst)
            except InfeasibleInstanceError:
                continue
            distinct = {
                tuple(evaluate(inst, solve_linear(inst, w)))
                for w in linear_sweep_weights(inst)
            }
            assert len(res.trace) <= len(distinct) + 3
