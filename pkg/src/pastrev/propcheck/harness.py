"""Property registry, seeded runner and JSON reports."""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..errors import DomainError

THEOREM = "theorem"
WITNESS = "witness"
ERRATUM = "erratum"


@dataclass(frozen=True)
class PropertySpec:
    id: str
    anchor: str
    fn: Callable
    cases: int
    mode: str = "randomized"
    kind: str = THEOREM
    params: dict = field(default_factory=dict)


REGISTRY: dict[str, PropertySpec] = {}


def prop(id: str, anchor: str, *, cases: int = 500, mode: str = "randomized",
         kind: str = THEOREM, **params):
    """Register ``fn(trial, rng, cases, **params)`` under ``id``."""
    def deco(fn):
        if id in REGISTRY:
            raise ValueError(f"duplicate property id {id}")
        REGISTRY[id] = PropertySpec(id, anchor, fn, cases, mode, kind, params)
        return fn
    return deco


def _text(value) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_text(v) for v in value) + "]"
    return str(value)


class Trial:
    """Mutable case/failure accumulator handed to a property function."""

    def __init__(self):
        self.cases = 0
        self.failures: list[dict] = []
        self.discrepancies: list[dict] = []
        self.notes: list[str] = []

    def case(self) -> None:
        self.cases += 1

    def check(self, ok: bool, inputs, expected, got) -> bool:
        if not ok:
            self.failures.append({"inputs": _text(inputs), "expected": _text(expected),
                                  "got": _text(got)})
        return ok

    def discrepancy(self, inputs, printed, corrected) -> None:
        self.discrepancies.append({"inputs": _text(inputs), "printed": _text(printed),
                                   "corrected": _text(corrected)})

    def note(self, text: str) -> None:
        self.notes.append(text)


@dataclass
class PropertyReport:
    id: str
    anchor: str
    kind: str
    mode: str
    seed: int
    cases: int
    failures: list
    discrepancies: list
    notes: list
    millis: int | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "id": self.id, "anchor": self.anchor, "kind": self.kind, "mode": self.mode,
            "seed": self.seed, "cases": self.cases, "failures": self.failures,
            "discrepancies": self.discrepancies, "notes": self.notes, "millis": self.millis,
        }


def _load_properties() -> None:
    from . import props_cheb, props_field, props_nat, props_op, props_poly  # noqa: F401


def registry() -> dict[str, PropertySpec]:
    _load_properties()
    return REGISTRY


def run_property(id: str, seed: int, cases: int | None = None,
                 timing: bool = False) -> PropertyReport:
    """Run one property on its own stream, derived from ``seed`` and ``id``.

    ``cases`` overrides the default count of randomized properties; exhaustive
    and fixed-instance properties ignore it.  ``millis`` is only filled when
    ``timing`` is set, so reports stay byte-identical across runs.
    """
    reg = registry()
    if id not in reg:
        raise DomainError(f"unknown property id {id!r}")
    spec = reg[id]
    n = spec.cases if cases is None or spec.mode != "randomized" else cases
    rng = random.Random(f"{seed}/{id}")
    trial = Trial()
    start = time.perf_counter()
    spec.fn(trial, rng, n, **spec.params)
    elapsed = round((time.perf_counter() - start) * 1000)
    return PropertyReport(spec.id, spec.anchor, spec.kind, spec.mode, seed, trial.cases,
                          trial.failures, trial.discrepancies, trial.notes,
                          elapsed if timing else None)


def _run_one(args) -> PropertyReport:
    return run_property(*args)


def run_all(seed: int, only: Iterable[str] | None = None, cases: int | None = None,
            timing: bool = False, jobs: int = 1) -> list[PropertyReport]:
    reg = registry()
    ids = list(reg) if only is None else list(only)
    for i in ids:
        if i not in reg:
            raise DomainError(f"unknown property id {i!r}")
    work = [(i, seed, cases, timing) for i in ids]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, work))
    return [_run_one(w) for w in work]


def suite_passed(reports: Iterable[PropertyReport]) -> bool:
    """Erratum diagnostics never fail the suite."""
    return all(r.passed for r in reports if r.kind != ERRATUM)


def reports_json(seed: int, reports: list[PropertyReport]) -> str:
    payload = {
        "seed": seed,
        "passed": suite_passed(reports),
        "reports": [r.as_dict() for r in reports],
    }
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
