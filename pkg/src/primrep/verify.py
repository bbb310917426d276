"""Check catalog formulas against the brute-force counts and build a JSON report."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .catalog import (
    CatalogEntry,
    catalog_entries,
    errata,
    evaluate_formula,
    get_entry,
    primitive_eisenstein_part,
)
from .repnums import count_primitive, count_representations, primitive_from_rep, rep_series

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Check:
    name: str
    first_counterexample: int | None
    expected: int | None = None
    got: object = None

    @property
    def passed(self) -> bool:
        return self.first_counterexample is None

    def as_dict(self) -> dict:
        d = {"check": self.name, "pass": self.passed, "first_counterexample": self.first_counterexample}
        if not self.passed:
            d["expected"] = str(self.expected)
            d["got"] = str(self.got)
        return d


def compare(name: str, candidate: Callable[[int], object], oracle: Callable[[int], int], ns: Iterable[int]) -> Check:
    for n in ns:
        want = oracle(n)
        try:
            got = candidate(n)
        except ArithmeticError as exc:
            return Check(name, n, want, f"error: {exc}")
        if got != want:
            return Check(name, n, want, got)
    return Check(name, None)


class Oracles:
    """Brute-force r(n) and r^p(n) for one form, series-based with an optional loop cross-check."""

    def __init__(self, form, hi: int):
        self.form = form
        self.series = rep_series(form, hi)
        self._rp: dict[int, int] = {}

    def r(self, n: int) -> int:
        return self.series.counts[n]

    def rp(self, n: int) -> int:
        if n not in self._rp:
            self._rp[n] = primitive_from_rep(self.r, n)
        return self._rp[n]

    def r_loop(self, n: int) -> int:
        return count_representations(self.form, n)

    def rp_loop(self, n: int) -> int:
        return count_primitive(self.form, n)


def verify_entry(entry: CatalogEntry, lo: int, hi: int, loop_oracle: bool = True) -> dict:
    if lo < 1 or hi < lo:
        raise ValueError(f"empty or invalid range {lo}..{hi}")
    ns = range(lo, hi + 1)
    o = Oracles(entry.form, hi)
    checks = [
        compare("r formula = series", lambda n: evaluate_formula(entry.spec, n), o.r, ns),
        compare("r^p closed form = series", entry.primitive, o.rp, ns),
        compare("r^p Eisenstein part = series", lambda n: primitive_eisenstein_part(entry.spec, n), o.rp, ns),
    ]
    if loop_oracle:
        checks.append(compare("series = enumeration", o.r, o.r_loop, ns))
        checks.append(compare("r^p series = primitive enumeration", o.rp, o.rp_loop, ns))
    if entry.alternate is not None and entry.label not in {e.label for e in errata()}:
        checks.append(compare("alternate r shape = series", entry.alternate, o.r, ns))
    return {
        "label": entry.label,
        "form": str(entry.form),
        "level": entry.level,
        "notes": list(entry.notes),
        "checks": [c.as_dict() for c in checks],
        "pass": all(c.passed for c in checks),
    }


def verify_errata(lo: int, hi: int, labels: set[str] | None = None) -> list[dict]:
    out = []
    for e in errata():
        if labels is not None and e.label not in labels:
            continue
        o = Oracles(get_entry(e.label).form, hi)
        oracle = o.r if e.kind == "r" else o.rp
        ns = range(lo, hi + 1)
        stated = compare("stated", e.stated, oracle, ns)
        corrected = compare("corrected", e.corrected, oracle, ns)
        out.append({
            "label": e.label,
            "kind": e.kind,
            "description": e.description,
            "stated_holds": stated.passed,
            "stated_first_counterexample": stated.first_counterexample,
            "stated_expected": None if stated.passed else str(stated.expected),
            "stated_got": None if stated.passed else str(stated.got),
            "corrected_holds": corrected.passed,
            "corrected_first_counterexample": corrected.first_counterexample,
        })
    return out


def worker_count() -> int:
    """Thread cap from PRIMREP_THREADS (default 1)."""
    raw = os.environ.get("PRIMREP_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify(selection: str, lo: int, hi: int, loop_oracle: bool = True) -> dict:
    """Report for one entry (label, alias or form) or ``"all"``."""
    if lo < 1 or hi < lo:
        raise ValueError(f"empty or invalid range {lo}..{hi}")
    entries = catalog_entries() if selection == "all" else [get_entry(selection)]
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        # map keeps entry order, so the report is deterministic
        results = list(pool.map(lambda e: verify_entry(e, lo, hi, loop_oracle), entries))
    labels = {e.label for e in entries}
    return {
        "schema_version": SCHEMA_VERSION,
        "range": [lo, hi],
        "entries": results,
        "errata": verify_errata(lo, hi, labels),
        "all_pass": all(r["pass"] for r in results),
    }
