"""Deterministic exact solver for the control programs.

The LP relaxation is solved either by an own dense bounded-variable
two-phase primal simplex (fine for the small and medium models the
encoders usually produce) or by scipy's HiGHS backend for large models;
`lp_engine="auto"` picks by model size. On top sits a best-first branch
and bound: node selection by best dual bound (ties broken by depth, then
creation order, with the down branch created first), branching on the
most fractional integral variable (ties by lowest variable index), a
rounding heuristic seeding incumbents at every node, and strengthened
pruning for integral objectives. Every step is deterministic, so two runs
of the same model and config return identical statuses, incumbents, and
node counts.

Incumbents are only accepted after an exact feasibility check of the
rounded point, and the final incumbent is re-verified with
`check_assignment` at the configured tolerances before it is returned.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .ilp import Assignment, LinearProgram, check_assignment


class SolverError(RuntimeError):
    """Internal solver failure (iteration blowup, backend error)."""


@dataclass(frozen=True)
class SolverConfig:
    feasibility_tol: float = 1e-6
    optimality_tol: float = 1e-6
    integrality_tol: float = 1e-5
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    lp_engine: str = "auto"

    def __post_init__(self):
        if min(self.feasibility_tol, self.optimality_tol, self.integrality_tol) <= 0:
            raise ValueError("tolerances must be positive")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")
        if self.lp_engine not in ("auto", "dense", "highs"):
            raise ValueError(f"unknown lp engine {self.lp_engine!r}")


@dataclass(frozen=True)
class LpOutcome:
    status: str
    value: Optional[float]
    point: Optional[dict]


@dataclass(frozen=True)
class SolveResult:
    status: str
    incumbent: Optional[Assignment]
    objective: Optional[object]
    bound: Optional[float]
    nodes_explored: int
    wall_time: float


def canonical_result(result: SolveResult) -> str:
    """Canonical rendering for determinism checks; wall time is excluded."""
    if result.incumbent is None:
        point = "-"
    else:
        point = ",".join(
            f"{name}={value!r}" for name, value in sorted(result.incumbent.values.items())
        )
    return (
        f"status={result.status};objective={result.objective!r};"
        f"bound={result.bound!r};nodes={result.nodes_explored};point={point}"
    )


_LOWER, _UPPER, _BASIC = 0, 1, 2
_TOL = 1e-9


class _StandardForm:
    """Arrays shared by every LP solve of one model: rows, bounds, objective
    (internally always maximized), slack boxes from the root bounds."""

    def __init__(self, model: LinearProgram):
        self.model = model
        self.names = [v.name for v in model.variables]
        self.ncols = len(self.names)
        if self.ncols == 0:
            raise ValueError("model has no variables")
        index = {name: i for i, name in enumerate(self.names)}
        self.lower = np.array([float(v.lower) for v in model.variables])
        self.upper = np.array([float(v.upper) for v in model.variables])
        if not (np.all(np.isfinite(self.lower)) and np.all(np.isfinite(self.upper))):
            raise ValueError("the solver requires finite variable bounds")
        self.integral = np.array([v.is_integral for v in model.variables], dtype=bool)
        self.sign = 1.0 if model.objective_sense == "max" else -1.0
        obj = np.zeros(self.ncols)
        for name, coef in model.objective:
            obj[index[name]] += float(coef)
        self.obj = self.sign * obj
        self.nrows = len(model.constraints)
        self.row_idx = []
        self.row_coef = []
        self.senses = []
        rhs = np.zeros(self.nrows)
        for r, constraint in enumerate(model.constraints):
            idx = np.array([index[name] for name, _ in constraint.terms], dtype=np.int64)
            coef = np.array([float(c) for _, c in constraint.terms])
            self.row_idx.append(idx)
            self.row_coef.append(coef)
            self.senses.append(constraint.sense)
            rhs[r] = float(constraint.rhs)
        self.rhs = rhs
        self.slack_lo = np.zeros(self.nrows)
        self.slack_hi = np.zeros(self.nrows)
        for r in range(self.nrows):
            coef = self.row_coef[r]
            idx = self.row_idx[r]
            lo, hi = self.lower[idx], self.upper[idx]
            maxact = float(np.sum(np.where(coef > 0, coef * hi, coef * lo)))
            minact = float(np.sum(np.where(coef > 0, coef * lo, coef * hi)))
            if self.senses[r] == "<=":
                self.slack_lo[r] = max(0.0, rhs[r] - maxact)
                self.slack_hi[r] = rhs[r] - minact
            elif self.senses[r] == ">=":
                self.slack_lo[r] = rhs[r] - maxact
                self.slack_hi[r] = min(0.0, rhs[r] - minact)
            else:
                self.slack_lo[r] = 0.0
                self.slack_hi[r] = 0.0
        self._dense = None
        self._csr = None
        self._prop = None
        self._sense_le = np.array([s == "<=" for s in self.senses], dtype=bool)
        self._sense_ge = np.array([s == ">=" for s in self.senses], dtype=bool)
        self._sense_eq = np.array([s == "=" for s in self.senses], dtype=bool)

    def dense(self) -> np.ndarray:
        if self._dense is None:
            A = np.zeros((self.nrows, self.ncols))
            for r in range(self.nrows):
                A[r, self.row_idx[r]] = self.row_coef[r]
            self._dense = A
        return self._dense

    def csr(self):
        if self._csr is None:
            from scipy.sparse import csr_matrix

            data = np.concatenate(self.row_coef) if self.nrows else np.zeros(0)
            cols = (
                np.concatenate(self.row_idx)
                if self.nrows
                else np.zeros(0, dtype=np.int64)
            )
            ptr = np.zeros(self.nrows + 1, dtype=np.int64)
            for r in range(self.nrows):
                ptr[r + 1] = ptr[r] + len(self.row_idx[r])
            matrix = csr_matrix((data, cols, ptr), shape=(self.nrows, self.ncols))
            matrix.eliminate_zeros()
            self._csr = matrix
        return self._csr

    def activities(self, x: np.ndarray) -> np.ndarray:
        if self.nrows == 0:
            return np.zeros(0)
        if self._dense is not None:
            return self._dense @ x
        return self.csr() @ x

    def feasible_point(self, x: np.ndarray, tol: float) -> bool:
        acts = self.activities(x)
        if np.any(acts[self._sense_le] > self.rhs[self._sense_le] + tol):
            return False
        if np.any(acts[self._sense_ge] < self.rhs[self._sense_ge] - tol):
            return False
        if np.any(np.abs(acts[self._sense_eq] - self.rhs[self._sense_eq]) > tol):
            return False
        return True

    def propagation_data(self):
        if self._prop is None:
            matrix = self.csr()
            nnz_rows = np.repeat(
                np.arange(self.nrows, dtype=np.int64), np.diff(matrix.indptr)
            )
            nnz_cols = matrix.indices.astype(np.int64)
            nnz_coef = matrix.data
            pos = nnz_coef > 0
            row_le = self._sense_le | self._sense_eq
            row_ge = self._sense_ge | self._sense_eq
            in_le = row_le[nnz_rows]
            in_ge = row_ge[nnz_rows]
            data = matrix.data
            pos_matrix = matrix.copy()
            pos_matrix.data = np.where(data > 0, data, 0.0)
            neg_matrix = matrix.copy()
            neg_matrix.data = np.where(data < 0, data, 0.0)

            def grouped(sel):
                # entries sorted by column so per-pass candidate bounds can
                # use segment reductions instead of slow scatter-min
                idx = np.nonzero(sel)[0]
                order = np.argsort(nnz_cols[idx], kind="stable")
                idx = idx[order]
                cols = nnz_cols[idx]
                if idx.size:
                    starts = np.nonzero(np.r_[True, cols[1:] != cols[:-1]])[0]
                    unique_cols = cols[starts]
                else:
                    starts = np.zeros(0, dtype=np.int64)
                    unique_cols = np.zeros(0, dtype=np.int64)
                return nnz_rows[idx], cols, nnz_coef[idx], starts, unique_cols

            cases = (
                grouped(in_le & pos),  # upper bounds from <= rows
                grouped(in_ge & ~pos),  # upper bounds from >= rows
                grouped(in_le & ~pos),  # lower bounds from <= rows
                grouped(in_ge & pos),  # lower bounds from >= rows
            )
            self._prop = (row_le, row_ge, pos_matrix, neg_matrix, cases)
        return self._prop


def _propagate(sf: _StandardForm, lower, upper, int_round=True, max_passes=50) -> bool:
    """Feasibility-based bound tightening (the allowed presolve).

    Repeatedly derives implied variable bounds from row activity ranges,
    rounding bounds of integral variables to integers, until a fixpoint.
    Tightens `lower`/`upper` in place; returns False when the node is
    proven infeasible. Preserves every integral-feasible point, so node
    dual bounds stay valid.
    """
    if sf.nrows == 0:
        return not np.any(lower > upper + _TOL)
    row_le, row_ge, pos_matrix, neg_matrix, cases = sf.propagation_data()
    up_le, up_ge, lo_le, lo_ge = cases
    integral = sf.integral
    if np.any(lower > upper + _TOL):
        return False
    for _ in range(max_passes):
        minact = pos_matrix @ lower + neg_matrix @ upper
        maxact = pos_matrix @ upper + neg_matrix @ lower
        if np.any(row_le & (minact > sf.rhs + 1e-7)):
            return False
        if np.any(row_ge & (maxact < sf.rhs - 1e-7)):
            return False
        slack = sf.rhs - minact
        surplus = maxact - sf.rhs
        new_upper = upper.copy()
        new_lower = lower.copy()
        rows, cols, coef, starts, ucols = up_le
        if ucols.size:
            cand = lower[cols] + slack[rows] / coef
            seg = np.minimum.reduceat(cand, starts)
            new_upper[ucols] = np.minimum(new_upper[ucols], seg)
        rows, cols, coef, starts, ucols = up_ge
        if ucols.size:
            cand = lower[cols] - surplus[rows] / coef
            seg = np.minimum.reduceat(cand, starts)
            new_upper[ucols] = np.minimum(new_upper[ucols], seg)
        rows, cols, coef, starts, ucols = lo_le
        if ucols.size:
            cand = upper[cols] + slack[rows] / coef
            seg = np.maximum.reduceat(cand, starts)
            new_lower[ucols] = np.maximum(new_lower[ucols], seg)
        rows, cols, coef, starts, ucols = lo_ge
        if ucols.size:
            cand = upper[cols] - surplus[rows] / coef
            seg = np.maximum.reduceat(cand, starts)
            new_lower[ucols] = np.maximum(new_lower[ucols], seg)
        if int_round:
            new_upper[integral] = np.floor(new_upper[integral] + 1e-6)
            new_lower[integral] = np.ceil(new_lower[integral] - 1e-6)
        np.minimum(upper, new_upper, out=new_upper)
        np.maximum(lower, new_lower, out=new_lower)
        if np.any(new_lower > new_upper + 1e-9):
            return False
        changed = np.any(upper - new_upper > 1e-9) or np.any(new_lower - lower > 1e-9)
        upper[:] = new_upper
        lower[:] = new_lower
        if not changed:
            break
    return True


def _choose_engine(sf: _StandardForm, engine: str) -> str:
    if engine != "auto":
        return engine
    if sf.nrows <= 200 and sf.nrows * sf.ncols <= 60_000:
        return "dense"
    return "highs"


def _lp_dense(sf: _StandardForm, lower, upper):
    """Two-phase bounded-variable primal simplex on a dense tableau.

    Entering variable by largest reduced-cost improvement with a Bland's
    rule fallback after a run of degenerate pivots; ratio-test ties go to
    the smallest basic variable index. Returns ("optimal", x, value) in
    the internal max sense, or ("infeasible", None, None).
    """
    nrows, ncols = sf.nrows, sf.ncols
    if np.any(lower > upper + _TOL):
        return "infeasible", None, None
    if np.any(sf.slack_lo > sf.slack_hi + _TOL):
        return "infeasible", None, None
    nvars = ncols + 2 * nrows
    lo = np.zeros(nvars)
    hi = np.zeros(nvars)
    lo[:ncols], hi[:ncols] = lower, upper
    lo[ncols : ncols + nrows] = sf.slack_lo
    hi[ncols : ncols + nrows] = sf.slack_hi

    x = np.zeros(nvars)
    x[:ncols] = lower
    status = np.full(nvars, _LOWER, dtype=np.int8)
    resid = sf.rhs - sf.dense() @ lower if nrows else np.zeros(0)
    # Slacks start at the bound nearest their required value so the
    # artificial basis starts as small as possible.
    slack_at_hi = np.abs(resid - sf.slack_hi) < np.abs(resid - sf.slack_lo)
    s0 = np.where(slack_at_hi, sf.slack_hi, sf.slack_lo)
    status[ncols : ncols + nrows][slack_at_hi] = _UPPER
    x[ncols : ncols + nrows] = s0
    resid = resid - s0
    art_sign = np.where(resid >= 0, 1.0, -1.0)
    basis = np.arange(ncols + nrows, nvars, dtype=np.int64)
    status[basis] = _BASIC
    x[basis] = np.abs(resid)
    hi[basis] = np.abs(resid)

    T = np.zeros((nrows, nvars))
    if nrows:
        T[:, :ncols] = art_sign[:, None] * sf.dense()
        T[np.arange(nrows), ncols + np.arange(nrows)] = art_sign
        T[np.arange(nrows), ncols + nrows + np.arange(nrows)] = 1.0

    max_iter = 20_000 + 10 * nvars

    def optimize(cost):
        d = cost - (cost[basis] @ T if nrows else np.zeros(nvars))
        bland = False
        degenerate_run = 0
        for iteration in range(max_iter):
            if iteration and iteration % 256 == 0:
                d = cost - (cost[basis] @ T if nrows else np.zeros(nvars))
            movable = (hi - lo) > 1e-12
            up_ok = (status == _LOWER) & movable & (d > _TOL)
            down_ok = (status == _UPPER) & movable & (d < -_TOL)
            if bland:
                eligible = np.nonzero(up_ok | down_ok)[0]
                if eligible.size == 0:
                    return
                j = int(eligible[0])
            else:
                score = np.where(up_ok, d, np.where(down_ok, -d, -np.inf))
                j = int(np.argmax(score))
                if not np.isfinite(score[j]) or score[j] <= _TOL:
                    return
            sigma = 1.0 if status[j] == _LOWER else -1.0
            u = T[:, j]
            su = sigma * u
            t_star = hi[j] - lo[j]
            row = -1
            if nrows:
                xB, loB, hiB = x[basis], lo[basis], hi[basis]
                ratios = np.full(nrows, np.inf)
                mask = su > _TOL
                ratios[mask] = (xB[mask] - loB[mask]) / su[mask]
                mask = su < -_TOL
                ratios[mask] = (hiB[mask] - xB[mask]) / (-su[mask])
                np.maximum(ratios, 0.0, out=ratios)
                rmin = float(ratios.min()) if nrows else np.inf
                if rmin < t_star - 1e-12:
                    t_star = rmin
                    ties = np.nonzero(ratios <= rmin + 1e-12)[0]
                    row = int(ties[np.argmin(basis[ties])])
            if t_star <= 1e-11:
                degenerate_run += 1
                if degenerate_run > max(64, 2 * nrows):
                    bland = True
            else:
                degenerate_run = 0
                bland = False
            if nrows:
                x[basis] -= sigma * t_star * u
            if row < 0:
                x[j] = hi[j] if status[j] == _LOWER else lo[j]
                status[j] = _UPPER if status[j] == _LOWER else _LOWER
            else:
                leaving = int(basis[row])
                hit_lower = su[row] > 0
                x[leaving] = lo[leaving] if hit_lower else hi[leaving]
                status[leaving] = _LOWER if hit_lower else _UPPER
                x[j] = (lo[j] + t_star) if sigma > 0 else (hi[j] - t_star)
                status[j] = _BASIC
                basis[row] = j
                pivot = T[row, j]
                T[row] /= pivot
                column = T[:, j].copy()
                column[row] = 0.0
                T[:] -= np.outer(column, T[row])
                T[:, j] = 0.0
                T[row, j] = 1.0
                d = d - d[j] * T[row]
                d[j] = 0.0
        raise SolverError("simplex iteration limit exceeded")

    if nrows:
        phase1 = np.zeros(nvars)
        phase1[ncols + nrows :] = -1.0
        optimize(phase1)
        scale = 1.0 + float(np.abs(sf.rhs).max()) if nrows else 1.0
        if float(x[ncols + nrows :].sum()) > 1e-7 * scale:
            return "infeasible", None, None
        hi[ncols + nrows :] = 0.0
        lo[ncols + nrows :] = 0.0
    phase2 = np.zeros(nvars)
    phase2[:ncols] = sf.obj
    optimize(phase2)
    point = np.clip(x[:ncols], lower, upper)
    return "optimal", point, float(sf.obj @ point)


def _lp_highs(sf: _StandardForm, lower, upper):
    """LP relaxation through scipy's HiGHS backend (deterministic)."""
    from scipy.optimize import linprog

    if not hasattr(sf, "_highs_parts"):
        le = np.nonzero(sf._sense_le)[0]
        ge = np.nonzero(sf._sense_ge)[0]
        eq = np.nonzero(sf._sense_eq)[0]
        matrix = sf.csr()
        a_ub = b_ub = a_eq = b_eq = None
        if le.size or ge.size:
            from scipy.sparse import vstack

            blocks = []
            rhs_parts = []
            if le.size:
                blocks.append(matrix[le])
                rhs_parts.append(sf.rhs[le])
            if ge.size:
                blocks.append(-matrix[ge])
                rhs_parts.append(-sf.rhs[ge])
            a_ub = vstack(blocks).tocsr() if len(blocks) > 1 else blocks[0]
            b_ub = np.concatenate(rhs_parts)
        if eq.size:
            a_eq = matrix[eq]
            b_eq = sf.rhs[eq]
        sf._highs_parts = (a_ub, b_ub, a_eq, b_eq)
    a_ub, b_ub, a_eq, b_eq = sf._highs_parts
    result = linprog(
        c=-sf.obj,
        A_ub=a_ub,
        b_ub=b_ub,
        A_eq=a_eq,
        b_eq=b_eq,
        bounds=np.column_stack((lower, upper)),
        method="highs",
    )
    if result.status == 0:
        point = np.clip(result.x, lower, upper)
        return "optimal", point, float(sf.obj @ point)
    if result.status == 2:
        return "infeasible", None, None
    raise SolverError(f"LP backend failed with status {result.status}: {result.message}")


def _apply_fixings(sf: _StandardForm, fixings):
    lower, upper = sf.lower.copy(), sf.upper.copy()
    if fixings:
        index = {name: i for i, name in enumerate(sf.names)}
        for name, value in fixings.items():
            i = index[name]
            if isinstance(value, tuple):
                lo, hi = value
            else:
                lo = hi = value
            lower[i] = max(lower[i], float(lo))
            upper[i] = min(upper[i], float(hi))
    return lower, upper


def solve_lp_relaxation(model: LinearProgram, fixings=None, engine: str = "auto") -> LpOutcome:
    """Continuous relaxation of the model under optional bound fixings.

    `fixings` maps variable names to a value or a (lower, upper) pair.
    Unboundedness cannot occur because all variables carry finite boxes.
    """
    sf = _StandardForm(model)
    lower, upper = _apply_fixings(sf, fixings)
    lp = _lp_dense if _choose_engine(sf, engine) == "dense" else _lp_highs
    status, x, value = lp(sf, lower, upper)
    if status != "optimal":
        return LpOutcome("infeasible", None, None)
    point = {name: float(v) for name, v in zip(sf.names, x)}
    return LpOutcome("optimal", sf.sign * value, point)


def _objective_is_integral(model: LinearProgram) -> bool:
    for name, coef in model.objective:
        if not model.variable(name).is_integral:
            return False
        if isinstance(coef, Fraction):
            if coef.denominator != 1:
                return False
        elif float(coef) != int(coef):
            return False
    return True


def solve(model: LinearProgram, config: Optional[SolverConfig] = None, trace=None) -> SolveResult:
    """Branch and bound to proven optimality within the configured
    tolerances, or a limit status. See the module docstring for the
    deterministic search rules."""
    config = config or SolverConfig()
    start = time.perf_counter()
    sf = _StandardForm(model)
    engine = _choose_engine(sf, config.lp_engine)
    lp = _lp_dense if engine == "dense" else _lp_highs
    int_idx = np.nonzero(sf.integral)[0]
    integral_obj = _objective_is_integral(model)
    obj_support = sf.obj[int_idx] != 0

    nodes = 0
    incumbent_vec = None
    incumbent_val = -np.inf

    def cutoff():
        if incumbent_vec is None:
            return -np.inf
        if integral_obj:
            return incumbent_val + 1.0 - 1e-9
        return incumbent_val + config.optimality_tol

    def try_incumbent(x):
        nonlocal incumbent_vec, incumbent_val
        rounded = x.copy()
        if int_idx.size:
            rounded[int_idx] = np.round(rounded[int_idx])
        np.clip(rounded, sf.lower, sf.upper, out=rounded)
        if not sf.feasible_point(rounded, config.feasibility_tol):
            return False
        value = float(sf.obj @ rounded)
        if value > incumbent_val + 1e-9:
            incumbent_vec = rounded
            incumbent_val = value
        return True

    def _fix(lo, hi, idx, point):
        values = np.clip(np.round(point[idx]), lo[idx], hi[idx])
        lo[idx] = values
        hi[idx] = values

    def dive(lower, upper, x):
        """Fix-and-propagate diving. Each round fixes the near-integral
        objective variables (these drive the bound), trial-fixes the other
        near-integral ones (indicator values can legitimately disagree
        with a fractional point, so conflicts are dropped), then fixes the
        most fractional variable with a one-step backtrack, propagates,
        and re-solves. Pure primal heuristic; node bounds are untouched.
        """
        if not int_idx.size:
            return
        bounds_lo, bounds_hi = lower.copy(), upper.copy()
        point = x
        for _ in range(12):
            rounded = np.round(point[int_idx])
            dist = np.abs(point[int_idx] - rounded)
            near = dist <= config.integrality_tol
            _fix(bounds_lo, bounds_hi, int_idx[near & obj_support], point)
            if not _propagate(sf, bounds_lo, bounds_hi):
                return
            rest = int_idx[near & ~obj_support]
            if rest.size:
                trial_lo, trial_hi = bounds_lo.copy(), bounds_hi.copy()
                _fix(trial_lo, trial_hi, rest, point)
                if _propagate(sf, trial_lo, trial_hi):
                    bounds_lo, bounds_hi = trial_lo, trial_hi
            if not near.all():
                var = int(int_idx[~near][np.argmax(dist[~near])])
                value = float(np.round(point[var]))
                value = min(max(value, bounds_lo[var]), bounds_hi[var])
                trial_lo, trial_hi = bounds_lo.copy(), bounds_hi.copy()
                trial_lo[var] = value
                trial_hi[var] = value
                if not _propagate(sf, trial_lo, trial_hi):
                    other = np.ceil(point[var]) if value == np.floor(point[var]) else np.floor(point[var])
                    other = min(max(float(other), bounds_lo[var]), bounds_hi[var])
                    trial_lo, trial_hi = bounds_lo.copy(), bounds_hi.copy()
                    trial_lo[var] = other
                    trial_hi[var] = other
                    if not _propagate(sf, trial_lo, trial_hi):
                        return
                bounds_lo, bounds_hi = trial_lo, trial_hi
            status, px, _ = lp(sf, bounds_lo, bounds_hi)
            if status != "optimal":
                return
            if try_incumbent(px):
                return
            dist_after = np.abs(px[int_idx] - np.round(px[int_idx]))
            if not np.any(dist_after > config.integrality_tol):
                return
            point = px

    heap = []
    sequence = 0

    def expand(lower, upper, depth):
        """Tighten bounds, solve the node LP; record an incumbent or push
        for branching."""
        nonlocal nodes, sequence
        nodes += 1
        if not _propagate(sf, lower, upper):
            return
        status, x, value = lp(sf, lower, upper)
        if status != "optimal":
            return
        if incumbent_vec is not None and value <= cutoff():
            return
        if int_idx.size:
            dist = np.abs(x[int_idx] - np.round(x[int_idx]))
            fractional = dist > config.integrality_tol
        else:
            fractional = np.zeros(0, dtype=bool)
        if not fractional.any():
            try_incumbent(x)
            return
        if not try_incumbent(x) and value > incumbent_val + 1e-9:
            dive(lower, upper, x)
        if incumbent_vec is not None and value <= cutoff():
            return
        scores = np.full(sf.ncols, -np.inf)
        scores[int_idx[fractional]] = dist[fractional]
        branch_var = int(np.argmax(scores))
        branch_val = float(x[branch_var])
        sequence += 1
        heapq.heappush(
            heap, (-value, -depth, sequence, lower, upper, branch_var, branch_val)
        )

    def out_of_time():
        return config.time_limit is not None and time.perf_counter() - start > config.time_limit

    def best_bound():
        bound = incumbent_val if incumbent_vec is not None else -np.inf
        if heap:
            bound = max(bound, -heap[0][0])
        return bound

    def finish(status):
        wall = time.perf_counter() - start
        if incumbent_vec is None:
            bound = None if status == "Infeasible" else sf.sign * best_bound()
            return SolveResult(status, None, None, bound, nodes, wall)
        values = {}
        for i, name in enumerate(sf.names):
            if sf.integral[i]:
                values[name] = int(round(incumbent_vec[i]))
            else:
                values[name] = float(incumbent_vec[i])
        assignment = Assignment(values)
        report = check_assignment(
            model, assignment, config.feasibility_tol, config.integrality_tol
        )
        if not report.ok:
            raise SolverError("incumbent failed the exact feasibility recheck")
        bound = report.objective if status == "Optimal" else sf.sign * best_bound()
        return SolveResult(status, assignment, report.objective, bound, nodes, wall)

    expand(sf.lower.copy(), sf.upper.copy(), 0)
    if trace is not None:
        trace.append(
            (
                nodes,
                sf.sign * best_bound(),
                sf.sign * incumbent_val if incumbent_vec is not None else None,
            )
        )
    if not heap and incumbent_vec is None:
        # Root relaxation infeasible, or every integral point is cut off.
        return finish("Infeasible")

    while heap:
        if out_of_time():
            return finish("TimeLimit")
        if config.node_limit is not None and nodes >= config.node_limit:
            return finish("NodeLimit")
        neg_value, neg_depth, _, lower, upper, branch_var, branch_val = heapq.heappop(heap)
        if incumbent_vec is not None and -neg_value <= cutoff():
            continue
        depth = -neg_depth
        floor = np.floor(branch_val)
        down_lower, down_upper = lower.copy(), upper.copy()
        down_upper[branch_var] = min(down_upper[branch_var], floor)
        expand(down_lower, down_upper, depth + 1)
        up_lower, up_upper = lower, upper
        up_lower[branch_var] = max(up_lower[branch_var], floor + 1.0)
        expand(up_lower, up_upper, depth + 1)
        if trace is not None:
            trace.append(
                (
                    nodes,
                    sf.sign * best_bound(),
                    sf.sign * incumbent_val if incumbent_vec is not None else None,
                )
            )
    return finish("Optimal" if incumbent_vec is not None else "Infeasible")
