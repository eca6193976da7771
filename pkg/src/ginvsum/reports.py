"""Named-residual reports shared by the verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import TolerancePolicy, frobenius_norm


@dataclass(frozen=True)
class ConditionItem:
    """One named check: absolute Frobenius ``residual`` judged against
    ``tolerance * max(1, scale)``.

    Items with ``required=False`` are informational: they are reported but
    do not affect the overall verdict (e.g. a sufficient hypothesis shown
    next to the identity it supports).
    """

    name: str
    residual: float
    scale: float
    passed: bool
    required: bool = True

    @property
    def relative(self) -> float:
        return self.residual / max(1.0, self.scale)

    def as_dict(self):
        return {
            "name": self.name,
            "residual": self.residual,
            "scale": self.scale,
            "relative": self.relative,
            "pass": self.passed,
            "required": self.required,
        }


@dataclass(frozen=True)
class ConditionReport:
    title: str
    items: tuple[ConditionItem, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def overall_pass(self) -> bool:
        return all(item.passed for item in self.items if item.required)

    def __getitem__(self, name) -> ConditionItem:
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(name)

    def names(self):
        return [item.name for item in self.items]

    def as_dict(self):
        return {
            "title": self.title,
            "overall_pass": self.overall_pass,
            "items": [item.as_dict() for item in self.items],
            "notes": list(self.notes),
        }


class ReportBuilder:
    """Accumulates items for one report under a fixed tolerance policy."""

    def __init__(self, title, tol: TolerancePolicy):
        self.title = title
        self.tol = tol
        self.items: list[ConditionItem] = []
        self.notes: list[str] = []

    def add(self, name, residual, scale=1.0, required=True, passed=None):
        residual = float(residual)
        scale = float(scale)
        if passed is None:
            passed = self.tol.accepts(residual, scale)
        self.items.append(ConditionItem(name, residual, scale, bool(passed), required))
        return self.items[-1]

    def zero(self, name, *terms, required=True):
        """Check that a signed sum of matrix products vanishes.

        Each term is ``(sign, M1, M2, ...)``; the residual is the norm of the
        sum and the scale is the sum of the products of factor norms.
        """
        total = None
        scale = 0.0
        for sign, *factors in terms:
            prod = factors[0]
            for f in factors[1:]:
                prod = prod @ f
            total = sign * prod if total is None else total + sign * prod
            scale += float(np.prod([frobenius_norm(f) for f in factors]))
        return self.add(name, frobenius_norm(total), scale, required)

    def hermitian(self, name, *factors, required=True):
        prod = factors[0]
        for f in factors[1:]:
            prod = prod @ f
        scale = float(np.prod([frobenius_norm(f) for f in factors]))
        return self.add(name, frobenius_norm(prod.conj().T - prod), scale, required)

    def extend(self, report: ConditionReport, required=None, prefix=""):
        for item in report.items:
            req = item.required if required is None else required
            self.items.append(ConditionItem(prefix + item.name, item.residual, item.scale, item.passed, req))
        self.notes.extend(report.notes)

    def build(self) -> ConditionReport:
        return ConditionReport(self.title, tuple(self.items), tuple(self.notes))
