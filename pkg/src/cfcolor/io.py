"""File formats: JSON for hypergraphs, graphs, colorings and lists; CSV for
geometric inputs and online insertion scripts."""
from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .geometry import Disc, Point2, Rect
from .hypergraph import Graph, Hypergraph, InputError


def read_text(path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def read_json(path):
    try:
        return json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def load_hypergraph(path) -> Hypergraph:
    return Hypergraph.from_json(read_json(path))


def load_graph(path) -> Graph:
    return Graph.from_json(read_json(path))


def _int_list(data, key: str, path) -> list:
    try:
        return data[key]
    except (KeyError, TypeError) as exc:
        raise InputError(f"{path}: missing {key!r}") from exc


def load_coloring(path) -> tuple:
    raw = _int_list(read_json(path), "colors", path)
    if not isinstance(raw, list) or not all(isinstance(c, int) for c in raw):
        raise InputError(f"{path}: colors must be a list of integers")
    return tuple(raw)


def load_lists(path) -> list[frozenset]:
    raw = _int_list(read_json(path), "lists", path)
    if not isinstance(raw, list) or not all(
            isinstance(L, list) and all(isinstance(c, int) for c in L) for L in raw):
        raise InputError(f"{path}: lists must be a list of integer lists")
    return [frozenset(L) for L in raw]


def _rows(path, width: int, what: str) -> list[list[str]]:
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(read_text(path))), 1):
        row = [c.strip() for c in row]
        if not row or not any(row) or row[0].startswith("#"):
            continue
        if len(row) != width:
            raise InputError(f"{path}:{lineno}: expected {width} fields for {what}, got {len(row)}")
        rows.append(row)
    return rows


def _ints(row, path) -> list[int]:
    try:
        return [int(c) for c in row]
    except ValueError as exc:
        raise InputError(f"{path}: non-integer field in {row}") from exc


def read_points(path) -> list[Point2]:
    return [Point2(*_ints(r, path)) for r in _rows(path, 2, "points (x,y)")]


def read_discs(path) -> list[Disc]:
    out = []
    for r in _rows(path, 3, "discs (cx,cy,r2)"):
        cx, cy, r2 = _ints(r, path)
        out.append(Disc(Point2(cx, cy), r2))
    return out


def read_rects(path) -> list[Rect]:
    return [Rect(*_ints(r, path)) for r in _rows(path, 4, "rects (x1,y1,x2,y2)")]


def read_numbers(path) -> list[Fraction]:
    return [_fraction(r[0], path) for r in _rows(path, 1, "positions")]


def _fraction(text: str, path) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{path}: bad number {text!r}") from exc


def read_script(path) -> list[Fraction]:
    """Insertion script: one ``insert,<position>`` line per step."""
    out = []
    for r in _rows(path, 2, "script (insert,<position>)"):
        if r[0] != "insert":
            raise InputError(f"{path}: unknown script command {r[0]!r}")
        out.append(_fraction(r[1], path))
    return out
