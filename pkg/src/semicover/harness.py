"""Exhaustive campaigns over (semigroup, partition) pairs with JSON-lines reports.

One :class:`ReportRecord` is written per pair.  Progress is checkpointed by
canonical key, so an interrupted run resumes by skipping every semigroup
whose key is already in the checkpoint file.
"""
from __future__ import annotations

import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from .algebra import CayleyTable, members
from .delta import CoverCertificate, min_cov_over_cells, verify_cover
from .enumeration import MAX_ENUM_ORDER, canonical_key, enumerate_semigroups
from .partitions import Partition, enumerate_partitions
from .theorems import (
    SoundnessError,
    f_bound,
    theorem3_cells,
    witness_theorem1,
    witness_theorem2,
    witness_theorem3_partition,
)

ALL_THEOREMS = frozenset({"1", "2", "3", "exact"})
JOBS_ENV = "SEMICOVER_JOBS"


def default_jobs() -> int:
    return max(1, int(os.environ.get(JOBS_ENV, "1")))


@dataclass(frozen=True)
class CampaignConfig:
    orders: tuple[int, int]
    partitions: object = "all"  # "all", an int cell count, or a list of codes
    theorems: frozenset = ALL_THEOREMS
    jobs: int = 1
    out: Optional[Path] = None
    checkpoint: Optional[Path] = None
    checkpoint_interval: int = 16
    anti_iso: bool = False

    def __post_init__(self):
        lo, hi = self.orders
        if not 1 <= lo <= hi <= MAX_ENUM_ORDER:
            raise ValueError(f"order range must lie within 1..{MAX_ENUM_ORDER}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if not set(self.theorems) <= ALL_THEOREMS:
            raise ValueError(f"unknown theorems {set(self.theorems) - ALL_THEOREMS}")
        if self.checkpoint_interval < 1:
            raise ValueError("checkpoint interval must be at least 1")


@dataclass
class ReportRecord:
    key: str
    order: int
    table: list[int]
    partition: list[int]
    n: int
    cells: list[dict]
    best_cell: Optional[int]
    best_value: Optional[int]
    passes: Optional[bool]
    theorem1: Optional[dict] = None
    theorem2: Optional[dict] = None
    theorem3: Optional[dict] = None
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "order": self.order,
            "table": self.table,
            "partition": self.partition,
            "n": self.n,
            "cells": self.cells,
            "best_cell": self.best_cell,
            "best_value": self.best_value,
            "passes": self.passes,
            "theorem1": self.theorem1,
            "theorem2": self.theorem2,
            "theorem3": self.theorem3,
            "wall_time": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def golden_dict(self) -> dict:
        """The record without its wall time, for reproducibility checks."""
        d = self.to_dict()
        del d["wall_time"]
        return d

    @classmethod
    def from_dict(cls, d: dict, verify: bool = True) -> "ReportRecord":
        rec = cls(**d)
        if verify:
            rec.verify()
        return rec

    @classmethod
    def from_json(cls, line: str, verify: bool = True) -> "ReportRecord":
        return cls.from_dict(json.loads(line), verify)

    def certificates(self) -> list[CoverCertificate]:
        out = []
        for part in (self.theorem1, self.theorem2, self.theorem3):
            if part and part.get("certificate"):
                out.append(CoverCertificate.from_dict(part["certificate"]))
        return out

    def verify(self) -> None:
        """Re-check every embedded certificate; raises SoundnessError on failure."""
        table = CayleyTable.from_flat(self.order, self.table)
        partition = Partition.from_code(self.partition)
        for cert in self.certificates():
            check = verify_cover(cert, partition, table)
            if not check:
                raise SoundnessError(f"record {self.key} {self.partition}: {check.reason}")


def evaluate(table: CayleyTable, partition: Partition, theorems=ALL_THEOREMS,
             key: str | None = None, cache: dict | None = None) -> ReportRecord:
    """Run the requested theorems and the exact solver on one pair."""
    start = time.perf_counter()
    if key is None:
        key = canonical_key(table).hex()
    n = partition.n
    cells, best_cell, best_value, passes = [], None, None, None
    report = None
    if "exact" in theorems:
        report = min_cov_over_cells(partition, table, cache)
        for cell, d, res in zip(report.cells, report.deltas, report.covs):
            cells.append({
                "cell": members(cell),
                "delta": members(d),
                "cov_defined": res.defined,
                "cov": res.value,
                "cov_witness": res.witness_elements if res.defined else None,
            })
        best_cell, best_value, passes = report.best_cell, report.best_value, report.passes
    else:
        cells = [{"cell": members(c)} for c in partition.cells]

    t1 = t2 = t3 = None
    if "1" in theorems:
        trace = witness_theorem1(partition, table)
        cert = trace.certificate
        t1 = {
            "certificate": cert.to_dict(),
            "size": len(cert.K),
            "f_bound": f_bound(n, 1).value,
            "steps": [s.to_dict() for s in trace.steps],
        }
    if "2" in theorems:
        cert = witness_theorem2(partition, table)
        if report is not None:
            chosen = report.covs[cert.cell_index]
            if not chosen.defined or chosen.value > len(cert.K):
                raise SoundnessError("exact cov of the theorem-2 cell exceeds |K|")
        t2 = {"certificate": cert.to_dict(), "size": len(cert.K)}
    if "3" in theorems:
        applicable = theorem3_cells(partition, table)
        cert = witness_theorem3_partition(partition, table)
        t3 = {
            "cells": applicable,
            "certificate": cert.to_dict() if cert else None,
        }
        if report is not None:
            t3["exact_all_one"] = all(report.covs[i].value == 1 for i in applicable)

    return ReportRecord(
        key=key,
        order=table.order,
        table=list(table.products),
        partition=list(partition.code()),
        n=n,
        cells=cells,
        best_cell=best_cell,
        best_value=best_value,
        passes=passes,
        theorem1=t1,
        theorem2=t2,
        theorem3=t3,
        wall_time=round(time.perf_counter() - start, 6),
    )


def partitions_for(order: int, mode) -> list[Partition]:
    if mode == "all":
        return list(enumerate_partitions(order, "all"))
    if isinstance(mode, int):
        return list(enumerate_partitions(order, mode)) if mode <= order else []
    return [Partition.from_code(c) for c in mode if len(c) == order]


def _evaluate_table(args) -> tuple[str, list[str]]:
    products, order, key, mode, theorems = args
    table = CayleyTable.from_flat(order, products)
    cache: dict = {}
    lines = [evaluate(table, p, theorems, key, cache).to_json() for p in partitions_for(order, mode)]
    return key, lines


def campaign_tables(config: CampaignConfig) -> Iterator[tuple[str, CayleyTable]]:
    """``(key, table)`` in deterministic order; with ``anti_iso`` transposes are added back."""
    lo, hi = config.orders
    for order in range(lo, hi + 1):
        for table in enumerate_semigroups(order, include_anti_iso_dedup=config.anti_iso):
            key = canonical_key(table)
            yield key.hex(), table
            if config.anti_iso:
                tkey = canonical_key(table.transpose())
                if tkey != key:
                    yield tkey.hex(), CayleyTable.from_flat(order, list(tkey))


@dataclass
class Summary:
    records: int = 0
    semigroups: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    theorem3_violations: list = field(default_factory=list)
    max_excess: Optional[int] = None
    exact_tightness: Counter = field(default_factory=Counter)
    theorem1_tightness: Counter = field(default_factory=Counter)
    theorem2_tightness: Counter = field(default_factory=Counter)

    def add(self, rec: ReportRecord) -> None:
        self.records += 1
        if rec.best_value is not None or rec.passes is not None:
            if rec.passes:
                excess = rec.best_value - rec.n
                self.max_excess = excess if self.max_excess is None else max(self.max_excess, excess)
                self.exact_tightness[f"{rec.best_value}/{rec.n}"] += 1
            else:
                self.violations.append((rec.key, rec.partition))
        if rec.theorem1:
            self.theorem1_tightness[f"{rec.theorem1['size']}/{rec.n}"] += 1
        if rec.theorem2:
            self.theorem2_tightness[f"{rec.theorem2['size']}/{rec.n}"] += 1
        if rec.theorem3 and rec.theorem3.get("exact_all_one") is False:
            self.theorem3_violations.append((rec.key, rec.partition))

    @property
    def ok(self) -> bool:
        return not self.violations and not self.theorem3_violations

    def to_dict(self) -> dict:
        return {
            "records": self.records,
            "semigroups": self.semigroups,
            "skipped_from_checkpoint": self.skipped,
            "violations": len(self.violations),
            "theorem3_violations": len(self.theorem3_violations),
            "max_best_minus_n": self.max_excess,
            "exact_best_over_n": dict(sorted(self.exact_tightness.items())),
            "theorem1_size_over_n": dict(sorted(self.theorem1_tightness.items())),
            "theorem2_size_over_n": dict(sorted(self.theorem2_tightness.items())),
            "first_violations": self.violations[:10],
        }


def _load_checkpoint(ckpt: Path, out: Path) -> set[str]:
    """Completed keys; drops records of incomplete semigroups from ``out``."""
    if not ckpt.exists():
        return set()
    done = {line.strip() for line in ckpt.read_text().splitlines() if line.strip()}
    if out.exists():
        kept = [line for line in out.read_text().splitlines()
                if line and json.loads(line)["key"] in done]
        out.write_text("".join(line + "\n" for line in kept))
    return done


def run_search(config: CampaignConfig, resume: bool = True) -> Summary:
    """Evaluate every (semigroup, partition) pair of the campaign.

    Records go to ``config.out`` (JSON lines) in enumeration order for any
    worker count.  A ``SoundnessError`` from any worker is re-raised.
    """
    summary = Summary()
    out = Path(config.out) if config.out else None
    ckpt = None
    done: set[str] = set()
    if out is not None:
        ckpt = Path(config.checkpoint) if config.checkpoint else out.with_name(out.name + ".ckpt")
        if resume:
            done = _load_checkpoint(ckpt, out)
            if done:
                for line in out.read_text().splitlines():
                    summary.add(ReportRecord.from_json(line, verify=False))
                summary.skipped = len(done)
                summary.semigroups = len(done)
        else:
            ckpt.unlink(missing_ok=True)
    mode = config.partitions
    theorems = frozenset(config.theorems)
    tasks = (
        (table.products, table.order, key, mode, theorems)
        for key, table in campaign_tables(config)
        if key not in done
    )

    out_f = open(out, "a" if done else "w", encoding="utf-8") if out else None
    ckpt_f = open(ckpt, "a", encoding="utf-8") if out else None
    pool = ProcessPoolExecutor(config.jobs) if config.jobs > 1 else None
    try:
        results = pool.map(_evaluate_table, tasks, chunksize=4) if pool else map(_evaluate_table, tasks)
        pending: list[str] = []
        for key, lines in results:
            summary.semigroups += 1
            for line in lines:
                summary.add(ReportRecord.from_json(line, verify=False))
            if out_f:
                out_f.writelines(line + "\n" for line in lines)
                pending.append(key)
                if len(pending) >= config.checkpoint_interval:
                    _commit(out_f, ckpt_f, pending)
        if out_f:
            _commit(out_f, ckpt_f, pending)
    finally:
        if pool:
            pool.shutdown(cancel_futures=True)
        if out_f:
            out_f.close()
            ckpt_f.close()
    return summary


def _commit(out_f, ckpt_f, keys: list[str]) -> None:
    # records must be on disk before their keys are marked complete
    out_f.flush()
    os.fsync(out_f.fileno())
    ckpt_f.writelines(k + "\n" for k in keys)
    ckpt_f.flush()
    keys.clear()
