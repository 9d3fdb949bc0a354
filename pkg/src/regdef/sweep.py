"""Enumerating every buildable instance of every family, and auditing them."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator

from .coloring import DEFAULT_BUDGET, SearchBudget
from .constructions import (
    ConstructionResult,
    InternalRecipeInconsistency,
    audit,
    build_glk,
    build_theorem1,
    build_theorem2,
    build_theorem3,
    build_theorem4,
)

BUILDERS = {
    "glk": (build_glk, ("l", "k")),
    "t1": (build_theorem1, ("k", "t")),
    "t2": (build_theorem2, ("k", "s")),
    "t3": (build_theorem3, ("k", "s")),
    "t4": (build_theorem4, ("k", "s", "t")),
}

GLK_LAYERS = range(2, 6)


@dataclass(frozen=True)
class Instance:
    family: str
    params: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, family: str, **params: int) -> "Instance":
        order = BUILDERS[family][1]
        return cls(family, tuple((name, params[name]) for name in order))

    def build(self, verify: bool = False) -> ConstructionResult:
        fn, _ = BUILDERS[self.family]
        return fn(**dict(self.params), verify=verify)

    def __str__(self) -> str:
        return f"{self.family}(" + ", ".join(f"{k}={v}" for k, v in self.params) + ")"


def t1_params(k: int) -> Iterator[int]:
    for t in range(0, k - 2):
        if k % 2 == 0 and t % 2:
            continue
        yield t


def t4_params(k: int) -> Iterator[tuple[int, int]]:
    for s in range(2, k - 1):
        for t in range(1, s):
            if s % 2 and t % 2:
                continue
            yield s, t


def instances(kmax: int, kmin: int = 2) -> list[Instance]:
    out = []
    for k in range(max(kmin, 2), kmax + 1):
        out += [Instance.of("glk", l=l, k=k) for l in GLK_LAYERS]
        if k >= 3:
            out += [Instance.of("t1", k=k, t=t) for t in t1_params(k)]
            family = "t2" if k % 2 else "t3"
            if family == "t2" or k >= 4:
                out += [Instance.of(family, k=k, s=s) for s in range(1, k - 1)]
        if k >= 4:
            out += [Instance.of("t4", k=k, s=s, t=t) for s, t in t4_params(k)]
    return out


@dataclass
class AuditRow:
    instance: Instance
    n: int = 0
    r: int = 0
    chi: int = 0
    defining: bool = False
    seconds: float = 0.0
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {str(self.instance):<24} n={self.n} r={self.r} chi={self.chi} unique={self.defining}"
        if self.problems:
            text += "  " + "; ".join(self.problems)
        return text


def audit_instance(inst: Instance, budget: SearchBudget = DEFAULT_BUDGET) -> AuditRow:
    row = AuditRow(inst)
    start = time.perf_counter()
    try:
        res = inst.build(verify=False)
    except InternalRecipeInconsistency as exc:
        row.problems.append(str(exc))
        row.seconds = time.perf_counter() - start
        return row
    rep = audit(res, budget)
    row.n, row.r, row.chi, row.defining = res.n, res.claimed_r, rep.chromatic, rep.defining
    row.problems = list(rep.notes)
    row.seconds = time.perf_counter() - start
    return row
