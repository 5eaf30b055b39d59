"""Machine-readable output records (CSV and JSON) and their readers.

A record is ``schema_version`` + the full command configuration + a payload
of one kind: ``ranked_list``, ``restoration`` or ``experiment_grid``. JSON
keeps floats at full round-trip precision; CSV prints 12 significant digits
and carries the version and command as ``#`` comment lines, so
``pandas.read_csv(path, comment="#")`` loads the table directly.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
from dataclasses import dataclass

from .restoration import DamageRecord, ExperimentGrid, RestorationReport
from .scorers import RankedList

__all__ = [
    "SCHEMA_VERSION",
    "OutputRecord",
    "ranked_record",
    "restoration_record",
    "grid_record",
    "to_json",
    "to_csv",
    "from_json",
    "from_csv",
    "emit",
    "parse",
]

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class OutputRecord:
    kind: str
    command: dict
    payload: dict
    schema_version: str = SCHEMA_VERSION


def _num(x):
    if x is None:
        return None
    x = float(x)
    return None if math.isnan(x) else x


def ranked_record(ranked: RankedList, command: dict) -> OutputRecord:
    rows = [
        {"rank": r, "node_a": a, "node_b": b, "score": _num(s)}
        for r, a, b, s in ranked.labelled()
    ]
    return OutputRecord("ranked_list", dict(command), {
        "method": ranked.method,
        "config": ranked.config.as_dict() if ranked.config else None,
        "universe": ranked.universe,
        "entries": rows,
    })


def restoration_record(rec: DamageRecord, rep: RestorationReport, command: dict) -> OutputRecord:
    g = rec.original
    removed = []
    for (pair, pre), post in zip(rec.removed, rep.post_ranks):
        a, b = g.pair_labels(pair)
        removed.append({"node_a": a, "node_b": b, "pre_rank": pre, "post_rank": post,
                        "restored": post <= rep.m})
    summary = {
        "scenario": rep.scenario,
        "removal": rec.config.as_dict(),
        "creation": rep.config.as_dict(),
        "m": rep.m,
        "M": g.N * (g.N - 1) // 2,
        "M_plus": rec.original_edge_count,
        "damaged_edge_count": rec.damaged.edge_count,
    }
    if rep.scenario == 1:
        summary.update(m_plus=rep.m_plus, Q=_num(rep.Q))
    else:
        summary.update(K=rep.K, eta=_num(rep.eta),
                       created=[list(g.pair_labels(p)) for p in rep.created])
    return OutputRecord("restoration", dict(command), {"summary": summary, "removed": removed})


_GRID_COLUMNS = ("removal_method", "creation_method", "mean_q", "std_q", "mean_eta", "std_eta", "n_valid")


def grid_record(grid: ExperimentGrid, command: dict) -> OutputRecord:
    rows = [
        {
            "removal_method": c.removal,
            "creation_method": c.creation,
            "mean_q": _num(c.mean_q),
            "std_q": _num(c.std_q),
            "mean_eta": _num(c.mean_eta),
            "std_eta": _num(c.std_eta),
            "n_valid": c.n_valid,
        }
        for c in grid.cells
    ]
    return OutputRecord("experiment_grid", dict(command), {
        "m": grid.m,
        "realizations": grid.realizations,
        "base_seed": grid.base_seed,
        "cells": rows,
    })


# -- JSON ------------------------------------------------------------------------


def to_json(rec: OutputRecord) -> str:
    doc = {"schema_version": rec.schema_version, "kind": rec.kind,
           "command": rec.command, "payload": rec.payload}
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def from_json(text: str) -> OutputRecord:
    doc = json.loads(text)
    return OutputRecord(doc["kind"], doc["command"], doc["payload"], doc["schema_version"])


# -- CSV -------------------------------------------------------------------------


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".12g")


def _header(rec, extra=None):
    lines = [f"# schema_version={rec.schema_version}",
             f"# kind={rec.kind}",
             "# command=" + json.dumps(rec.command, sort_keys=True)]
    for k, v in (extra or {}).items():
        lines.append(f"# {k}=" + json.dumps(v, sort_keys=True))
    return "\n".join(lines) + "\n"


def _table(columns, rows):
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row[c]) for c in columns])
    return buf.getvalue()


def to_csv(rec: OutputRecord) -> str:
    p = rec.payload
    if rec.kind == "ranked_list":
        meta = {"method": p["method"], "config": p["config"], "universe": p["universe"]}
        return _header(rec, meta) + _table(("rank", "node_a", "node_b", "score"), p["entries"])
    if rec.kind == "restoration":
        summary = dict(p["summary"])
        for key in ("Q", "eta"):
            if key in summary and summary[key] is not None:
                summary[key] = float(_fmt(summary[key]))
        return _header(rec, {"summary": summary}) + _table(
            ("node_a", "node_b", "pre_rank", "post_rank", "restored"), p["removed"])
    if rec.kind == "experiment_grid":
        meta = {k: p[k] for k in ("m", "realizations", "base_seed")}
        return _header(rec, meta) + _table(_GRID_COLUMNS, p["cells"])
    raise ValueError(f"unknown record kind {rec.kind!r}")


_INT_COLS = {"rank", "pre_rank", "post_rank", "n_valid"}
_FLOAT_COLS = {"score", "mean_q", "std_q", "mean_eta", "std_eta"}


def _cell(col, text):
    if col in _INT_COLS:
        return int(text)
    if col in _FLOAT_COLS:
        return float(text) if text != "" else None
    if col == "restored":
        return text == "1"
    return text


def from_csv(text: str) -> OutputRecord:
    meta = {}
    body = []
    for line in text.splitlines(keepends=True):
        if line.startswith("# "):
            key, _, value = line[2:].rstrip("\n").partition("=")
            meta[key] = value
        else:
            body.append(line)
    kind = meta["kind"]
    command = json.loads(meta["command"])
    reader = csv.reader(body)
    columns = next(reader)
    rows = [{c: _cell(c, v) for c, v in zip(columns, r)} for r in reader]
    if kind == "ranked_list":
        payload = {"method": json.loads(meta["method"]), "config": json.loads(meta["config"]),
                   "universe": json.loads(meta["universe"]), "entries": rows}
    elif kind == "restoration":
        payload = {"summary": json.loads(meta["summary"]), "removed": rows}
    elif kind == "experiment_grid":
        payload = {k: json.loads(meta[k]) for k in ("m", "realizations", "base_seed")}
        payload["cells"] = rows
    else:
        raise ValueError(f"unknown record kind {kind!r}")
    return OutputRecord(kind, command, payload, meta["schema_version"])


def emit(rec: OutputRecord, fmt: str = "csv") -> str:
    if fmt == "csv":
        return to_csv(rec)
    if fmt == "json":
        return to_json(rec)
    raise ValueError(f"unknown format {fmt!r}")


def parse(text: str, fmt: str = "csv") -> OutputRecord:
    return from_csv(text) if fmt == "csv" else from_json(text)
