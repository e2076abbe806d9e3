"""Result records shared by the checks and the CLI."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

__all__ = ["InequalityReport", "ScalingSweepResult", "INEQUALITY_IDS"]

INEQUALITY_IDS = ("l1_bound", "embedding", "interpolation", "young")


def _grid_meta_dict(grid_meta) -> Any:
    if grid_meta == "exact" or grid_meta is None:
        return "exact"
    return {"n": grid_meta.n, "N": grid_meta.N, "L": grid_meta.L}


@dataclass(frozen=True)
class InequalityReport:
    """Both sides of one inequality ``lhs <= rhs`` and the verdict.

    ``equality_expected`` marks inputs for which the inequality is known
    to be an identity; such reports only pass when the ratio is 1 to
    within ``tolerance``.
    """

    inequality_id: str
    lhs: float
    rhs: float
    constant_used: float
    tolerance: float
    grid_meta: Any = "exact"
    degenerate: bool = False
    equality_expected: bool = False
    ratio: float = field(init=False)
    passed: bool = field(init=False)

    def __post_init__(self):
        if self.inequality_id not in INEQUALITY_IDS:
            raise ValueError(f"unknown inequality id {self.inequality_id!r}")
        for name in ("lhs", "rhs", "constant_used", "tolerance"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        degenerate = self.degenerate or self.rhs == 0.0
        object.__setattr__(self, "degenerate", degenerate)
        if degenerate:
            # 0 <= 0 holds; ratio reported as 0 to keep every field finite
            ratio, passed = 0.0, True
        else:
            ratio = self.lhs / self.rhs
            passed = ratio <= 1.0 + self.tolerance
            if self.equality_expected:
                passed = passed and ratio >= 1.0 - self.tolerance
        object.__setattr__(self, "ratio", ratio)
        object.__setattr__(self, "passed", passed)

    def to_dict(self) -> dict:
        return {
            "inequality_id": self.inequality_id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ratio": self.ratio,
            "constant_used": self.constant_used,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "degenerate": self.degenerate,
            "equality_expected": self.equality_expected,
            "grid": _grid_meta_dict(self.grid_meta),
        }


@dataclass(frozen=True)
class ScalingSweepResult:
    """Samples of f(lam) = lam^(-n) A^2 + lam^(2s-n) B^2 around its minimiser."""

    lambdas: np.ndarray
    objective: np.ndarray
    argmin_sampled: float
    lambda_star: float
    min_value_closed_form: float
    a: float
    b: float
    degenerate: bool = False

    @property
    def min_sampled(self) -> float:
        return float(self.objective.min()) if self.objective.size else 0.0

    @property
    def log_step(self) -> float:
        if self.lambdas.size < 2:
            return 0.0
        return float(np.log(self.lambdas[1] / self.lambdas[0]))

    @property
    def min_relative_gap(self) -> float:
        """(sampled min - closed-form min) / closed-form min; nonnegative up to rounding."""
        if self.degenerate or self.min_value_closed_form == 0.0:
            return 0.0
        return (self.min_sampled - self.min_value_closed_form) / self.min_value_closed_form

    @property
    def brackets(self) -> bool:
        """True when the sampled argmin lies within one log step of lambda_star."""
        if self.degenerate:
            return False
        return abs(math.log(self.argmin_sampled / self.lambda_star)) <= self.log_step * (1 + 1e-12)

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "lambda_star": self.lambda_star,
            "argmin_sampled": self.argmin_sampled,
            "min_value_closed_form": self.min_value_closed_form,
            "min_sampled": self.min_sampled,
            "min_relative_gap": self.min_relative_gap,
            "brackets": self.brackets,
            "degenerate": self.degenerate,
            "lambdas": [float(v) for v in self.lambdas],
            "objective": [float(v) for v in self.objective],
        }
