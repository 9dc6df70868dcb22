"""Registry of verifiable identities and the machinery that runs them.

An :class:`Identity` binds an evaluator to a fixed, versioned parameter
domain.  Exact identities return a cyclotomic residual that must vanish;
numeric ones return a residual magnitude together with the tail bound of
every truncated series that went into it.  Cases whose printed form is
known to be false are registered with ``holds=False`` so that the reports
keep them visible without counting them as regressions.
"""

from __future__ import annotations

import fnmatch
import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Iterable

from .errors import DomainError, UnknownIdentityError
from .exact import Cyclotomic, format_literal


class Mode(str, Enum):
    EXACT = "exact"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class NumericOutcome:
    residual: float
    tail: float = 0.0


@dataclass(frozen=True)
class Identity:
    id: str
    anchor: str
    mode: Mode
    evaluate: Callable[[dict], Any]
    domain: Callable[[], list[dict]]
    tolerance: float | None = None
    holds: bool = True
    admits: Callable[[dict], str | None] | None = None


@dataclass(frozen=True)
class IdentityCase:
    id: str
    anchor: str
    mode: Mode
    params: dict
    tolerance: float | None = None
    holds: bool = True


@dataclass
class IdentityReport:
    id: str
    params: dict
    mode: Mode
    residual: Any
    passed: bool
    tail: float | None
    elapsed_ms: float
    holds: bool = True

    @property
    def as_expected(self) -> bool:
        return self.passed == self.holds

    def to_dict(self) -> dict:
        if self.mode is Mode.EXACT:
            residual = format_literal(self.residual)
        else:
            residual = self.residual
        out = {
            "id": self.id,
            "params": self.params,
            "mode": self.mode.value,
            "residual": residual,
            "pass": self.passed,
            "tail": self.tail,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if not self.holds:
            out["expected"] = "fail"
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


_REGISTRY: dict[str, Identity] = {}


def register(
    id: str,
    anchor: str,
    mode: Mode | str,
    domain: Callable[[], list[dict]],
    *,
    tolerance: float | None = None,
    holds: bool = True,
    admits: Callable[[dict], str | None] | None = None,
):
    """Decorator registering ``fn(params)`` as the evaluator of ``id``."""
    mode = Mode(mode)
    if mode is Mode.NUMERIC and tolerance is None:
        raise ValueError(f"numeric identity {id} needs a tolerance")

    def deco(fn):
        if id in _REGISTRY:
            raise ValueError(f"duplicate identity id {id}")
        _REGISTRY[id] = Identity(id, anchor, mode, fn, domain, tolerance, holds, admits)
        return fn

    return deco


def _load_catalogs() -> None:
    # registration happens at import time
    from . import catalog_exact, catalog_numeric  # noqa: F401


def registry() -> dict[str, Identity]:
    _load_catalogs()
    return dict(_REGISTRY)


_NAT = re.compile(r"(\d+)")


def id_key(id: str):
    """Natural order: E2 before E10, numbered ids before suffixed ones."""
    return tuple(int(p) if p.isdigit() else p for p in _NAT.split(id))


def params_key(params: dict) -> str:
    return json.dumps(params, sort_keys=True)


def get(id: str) -> Identity:
    reg = registry()
    if id not in reg:
        raise UnknownIdentityError(f"unknown identity id {id!r}")
    return reg[id]


def select(pattern: str = "*", mode: Mode | str | None = None, *, include_errata: bool = False) -> list[Identity]:
    mode = Mode(mode) if mode is not None else None
    out = [
        ident
        for ident in registry().values()
        if fnmatch.fnmatchcase(ident.id, pattern)
        and (mode is None or ident.mode is mode)
        and (include_errata or ident.holds)
    ]
    return sorted(out, key=lambda i: id_key(i.id))


def cases(pattern: str = "*", mode=None, *, include_errata: bool = False) -> list[IdentityCase]:
    out = []
    for ident in select(pattern, mode, include_errata=include_errata):
        for params in ident.domain():
            out.append(IdentityCase(ident.id, ident.anchor, ident.mode, params, ident.tolerance, ident.holds))
    return out


def _judge(ident: Identity, outcome, tolerance: float | None = None) -> tuple[Any, bool, float | None]:
    if ident.mode is Mode.EXACT:
        residual = Cyclotomic.coerce(outcome)
        return residual, residual.is_zero(), None
    if not isinstance(outcome, NumericOutcome):
        outcome = NumericOutcome(float(abs(outcome)))
    tol = ident.tolerance if tolerance is None else tolerance
    ok = outcome.residual <= tol and outcome.tail <= tol / 10
    return outcome.residual, ok, outcome.tail


_SHAPES: dict[str, frozenset] = {}


def _shapes(ident: Identity) -> frozenset:
    shapes = _SHAPES.get(ident.id)
    if shapes is None:
        shapes = frozenset(frozenset(p) for p in ident.domain())
        _SHAPES[ident.id] = shapes
    return shapes


def _check_params(ident: Identity, params: dict) -> None:
    if not isinstance(params, dict):
        raise DomainError(f"{ident.id}: parameters outside the declared domain: expected a mapping, got {type(params).__name__}")
    if frozenset(params) not in _shapes(ident):
        keys = " | ".join(sorted(",".join(sorted(s)) for s in _shapes(ident)))
        raise DomainError(f"{ident.id}: parameters outside the declared domain: expected keys {keys}")
    if ident.admits is not None:
        reason = ident.admits(params)
        if reason:
            raise DomainError(f"{ident.id}: parameters outside the declared domain: {reason}")


def run_case(id: str, params: dict, tolerance: float | None = None) -> IdentityReport:
    """Evaluate one case; ``tolerance`` overrides the registered one (numeric only).

    Parameters need not come from the registered grid, but they must have
    the shape of a grid entry and satisfy the identity's hypotheses.
    """
    ident = get(id)
    _check_params(ident, params)
    start = time.perf_counter()
    try:
        outcome = ident.evaluate(params)
    except (KeyError, TypeError, IndexError, ZeroDivisionError) as exc:
        raise DomainError(f"{id}: parameters outside the declared domain: {exc!r}") from exc
    elapsed = (time.perf_counter() - start) * 1000
    residual, ok, tail = _judge(ident, outcome, tolerance)
    return IdentityReport(id, params, ident.mode, residual, ok, tail, elapsed, ident.holds)


def _run_pair(pair):
    return run_case(*pair)


def run_suite(
    pattern: str = "*",
    mode: Mode | str | None = None,
    *,
    include_errata: bool = False,
    workers: int = 1,
    tolerances: dict[str, float] | None = None,
) -> list[IdentityReport]:
    """Run every case matching ``pattern`` over its full domain.

    Reports come back sorted by id, then by parameters, whatever the
    number of worker processes.
    """
    tolerances = tolerances or {}
    jobs = [(c.id, c.params, tolerances.get(c.id)) for c in cases(pattern, mode, include_errata=include_errata)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_pair, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        reports = [run_case(*job) for job in jobs]
    reports.sort(key=lambda r: (id_key(r.id), params_key(r.params)))
    return reports


def summarize(reports: Iterable[IdentityReport]) -> tuple[int, int]:
    reports = list(reports)
    return sum(r.passed for r in reports), len(reports)


# Every id the catalog must contain; checked by ``manifest_mismatch``.
MANIFEST: tuple[str, ...] = (
    "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "E9", "E10", "E11", "E12",
    "N1", "N2", "N3", "N4", "N5", "N6", "N7", "N8", "N9", "N10", "N11", "N12",
    "N13", "N14", "N_ex1", "N_cauchy",
    "X_rep2", "X_item6", "X_52", "X_chain",
    "X_cauchy", "X_s8", "X_s8_1", "X_k6_sign", "X_k8_simplified",
)


def manifest_mismatch() -> tuple[set[str], set[str]]:
    """(ids in the manifest but unregistered, ids registered but unlisted)."""
    reg = set(registry())
    want = set(MANIFEST)
    return want - reg, reg - want

