import random

import pytest

from ballotcontrol import (
    LinearProgram,
    SolverConfig,
    SolverError,
    canonical_result,
    check_assignment,
    encode_ce,
    encode_re,
    solve,
    solve_lp_relaxation,
    StrictProfile,
    ScoreMatrix,
)
from genutil import enumerate_binary_optimum, random_binary_program


def box_model():
    model = LinearProgram("box")
    model.add_variable("x", "continuous", 0, 1)
    model.set_objective("max", [("x", 1)])
    return model


class TestLpRelaxation:
    def test_unconstrained_box(self):
        outcome = solve_lp_relaxation(box_model())
        assert outcome.status == "optimal"
        assert outcome.value == pytest.approx(1.0)

    def test_infeasible_interval(self):
        model = LinearProgram()
        model.add_variable("x", "continuous", 0, 1)
        model.set_objective("max", [("x", 1)])
        model.add_constraint([("x", 1)], ">=", 1)
        model.add_constraint([("x", 1)], "<=", 0)
        assert solve_lp_relaxation(model).status == "infeasible"

    def test_fixing_overrides_bounds(self):
        outcome = solve_lp_relaxation(box_model(), fixings={"x": 0.25})
        assert outcome.value == pytest.approx(0.25)

    def test_relaxation_bounds_integer_optimum(self):
        problem = encode_re(ScoreMatrix(((1, 0), (0, 1))))
        outcome = solve_lp_relaxation(problem.model)
        assert outcome.status == "optimal"
        assert outcome.value >= 1 - 1e-9

    def test_min_sense(self):
        model = LinearProgram()
        model.add_variable("x", "continuous", 2, 5)
        model.set_objective("min", [("x", 1)])
        assert solve_lp_relaxation(model).value == pytest.approx(2.0)

    def test_infinite_bounds_rejected(self):
        model = LinearProgram()
        model.add_variable("x", "continuous", 0, float("inf"))
        model.set_objective("max", [("x", 1)])
        with pytest.raises(ValueError):
            solve_lp_relaxation(model)

    def test_engines_agree(self):
        rng = random.Random(21)
        for _ in range(10):
            model = random_binary_program(rng, max_vars=8, max_rows=6)
            dense = solve_lp_relaxation(model, engine="dense")
            highs = solve_lp_relaxation(model, engine="highs")
            assert dense.status == highs.status
            if dense.status == "optimal":
                assert dense.value == pytest.approx(highs.value, abs=1e-6)


class TestSolve:
    def test_integral_root_needs_no_branching(self, worked_rankings):
        problem = encode_ce(StrictProfile(worked_rankings))
        result = solve(problem.model)
        assert result.status == "Optimal"
        assert result.objective == 3
        assert result.nodes_explored == 1

    def test_infeasible_at_relaxation(self):
        problem = encode_re(ScoreMatrix(((0, 0), (1, 1))))
        result = solve(problem.model)
        assert result.status == "Infeasible"
        assert result.incumbent is None

    def test_pure_lp_allowed(self):
        result = solve(box_model())
        assert result.status == "Optimal"
        assert result.objective == pytest.approx(1.0)

    @pytest.mark.parametrize("seed", range(60))
    def test_matches_enumeration(self, seed):
        rng = random.Random(1000 + seed)
        model = random_binary_program(rng)
        result = solve(model)
        status, best = enumerate_binary_optimum(model)
        assert result.status == status
        if status == "Optimal":
            assert result.objective == best

    def test_determinism(self):
        rng = random.Random(7)
        for _ in range(10):
            model = random_binary_program(rng, max_vars=10, max_rows=8)
            first = solve(model)
            second = solve(model)
            assert canonical_result(first) == canonical_result(second)

    def test_node_limit(self):
        rng = random.Random(12345)
        # hunt for an instance that needs branching, then cap it
        for _ in range(200):
            model = random_binary_program(rng, max_vars=14, max_rows=12)
            unlimited = solve(model)
            if unlimited.nodes_explored > 3:
                limited = solve(model, SolverConfig(node_limit=2))
                assert limited.status in ("NodeLimit", "Optimal", "Infeasible")
                if limited.status == "NodeLimit":
                    return
        pytest.fail("no branching instance found")

    def test_time_limit(self, worked_rankings):
        rng = random.Random(4242)
        for _ in range(100):
            model = random_binary_program(rng, max_vars=16, max_rows=16)
            result = solve(model, SolverConfig(time_limit=1e-9))
            if result.status == "TimeLimit":
                return
        pytest.fail("time limit never triggered")

    def test_incumbent_passes_exact_check(self):
        rng = random.Random(77)
        config = SolverConfig()
        for _ in range(20):
            model = random_binary_program(rng, max_vars=12, max_rows=10)
            result = solve(model, config)
            if result.status == "Optimal":
                report = check_assignment(
                    model, result.incumbent, config.feasibility_tol, config.integrality_tol
                )
                assert report.ok
                assert abs(result.objective - result.bound) <= config.optimality_tol

    def test_bound_monotone_incumbent_monotone(self):
        rng = random.Random(31)
        for _ in range(40):
            model = random_binary_program(rng, max_vars=12, max_rows=10)
            trace = []
            solve(model, trace=trace)
            if len(trace) < 2 or model.objective_sense != "max":
                continue
            bounds = [b for _, b, _ in trace]
            assert all(b1 >= b2 - 1e-9 for b1, b2 in zip(bounds, bounds[1:]))
            incumbents = [i for _, _, i in trace if i is not None]
            assert all(i1 <= i2 + 1e-9 for i1, i2 in zip(incumbents, incumbents[1:]))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SolverConfig(feasibility_tol=0)
        with pytest.raises(ValueError):
            SolverConfig(node_limit=0)
        with pytest.raises(ValueError):
            SolverConfig(lp_engine="unknown-backend")

    def test_forced_engines_agree_on_ip(self):
        rng = random.Random(55)
        for _ in range(10):
            model = random_binary_program(rng, max_vars=10, max_rows=8)
            dense = solve(model, SolverConfig(lp_engine="dense"))
            highs = solve(model, SolverConfig(lp_engine="highs"))
            assert dense.status == highs.status
            if dense.status == "Optimal":
                assert dense.objective == highs.objective
