"""Ensembles of (object, copy number) pairs and the assembly equation.

An ensemble holds pairwise-distinct strings with positive copy numbers.
Its Assembly is A = sum_i exp(a_i) * (n_i - 1) / N, where a_i is the exact
assembly index of object i, n_i its copy number, and N the total object
count (objects with n_i = 1 are included in N; they contribute 0 to the
sum but do scale the other terms).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .core import DEFAULT_LENGTH_CAP, assembly_index


class InexactIndexError(ValueError):
    """The assembly equation needs exact indices for every object."""


class EnsembleFormatError(ValueError):
    """Ensemble file could not be parsed."""


@dataclass(frozen=True)
class Ensemble:
    entries: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("ensemble must hold at least one entry")
        seen = set()
        for obj, copies in self.entries:
            if not obj:
                raise ValueError("ensemble objects must be non-empty strings")
            if copies < 1:
                raise ValueError(f"copy number for {obj!r} must be >= 1")
            if obj in seen:
                raise ValueError(f"duplicate object {obj!r}")
            seen.add(obj)

    @property
    def total_count(self) -> int:
        return sum(copies for _, copies in self.entries)


def assembly_A(ensemble: Ensemble, length_cap: int = DEFAULT_LENGTH_CAP) -> float:
    """Evaluate the assembly equation; raises if any index is inexact."""
    total = ensemble.total_count
    a_value = 0.0
    for obj, copies in ensemble.entries:
        result = assembly_index(obj, length_cap)
        if not result.exact:
            raise InexactIndexError(
                f"assembly index of {obj!r} is only bracketed "
                f"[{result.lower}, {result.upper}] under cap {length_cap}"
            )
        a_value += math.exp(result.index) * (copies - 1) / total
    return a_value


def ensemble_terms(
    ensemble: Ensemble, length_cap: int = DEFAULT_LENGTH_CAP
) -> list[tuple[str, int, int, float]]:
    """Per-entry (object, copies, index, term) breakdown of the equation."""
    total = ensemble.total_count
    rows = []
    for obj, copies in ensemble.entries:
        result = assembly_index(obj, length_cap)
        if not result.exact:
            raise InexactIndexError(
                f"assembly index of {obj!r} is only bracketed "
                f"[{result.lower}, {result.upper}] under cap {length_cap}"
            )
        rows.append((obj, copies, result.index, math.exp(result.index) * (copies - 1) / total))
    return rows


def parse_ensemble(text: str) -> Ensemble:
    """Parse the CSV (`object,copies` header) or JSON ensemble format."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        return _parse_json(text)
    return _parse_csv(text)


def load_ensemble(path: str) -> Ensemble:
    with open(path, encoding="utf-8") as fh:
        return parse_ensemble(fh.read())


def _parse_json(text: str) -> Ensemble:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EnsembleFormatError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, list):
        raise EnsembleFormatError("JSON ensemble must be an array of objects")
    entries = []
    for i, item in enumerate(data, start=1):
        if (
            not isinstance(item, dict)
            or not isinstance(item.get("object"), str)
            or not isinstance(item.get("copies"), int)
            or isinstance(item.get("copies"), bool)
        ):
            raise EnsembleFormatError(
                f'entry {i}: expected {{"object": string, "copies": integer}}'
            )
        entries.append((item["object"], item["copies"]))
    try:
        return Ensemble(tuple(entries))
    except ValueError as exc:
        raise EnsembleFormatError(str(exc)) from None


def _parse_csv(text: str) -> Ensemble:
    reader = csv.reader(io.StringIO(text))
    rows = [(lineno, row) for lineno, row in enumerate(reader, start=1) if row]
    if not rows or [c.strip() for c in rows[0][1]] != ["object", "copies"]:
        raise EnsembleFormatError("line 1: expected header 'object,copies'")
    entries = []
    for lineno, row in rows[1:]:
        if len(row) != 2:
            raise EnsembleFormatError(f"line {lineno}: expected two columns")
        obj, copies_text = row[0], row[1].strip()
        if not copies_text.isdigit():
            raise EnsembleFormatError(f"line {lineno}: copies must be a positive integer")
        entries.append((obj, int(copies_text)))
    try:
        return Ensemble(tuple(entries))
    except ValueError as exc:
        raise EnsembleFormatError(str(exc)) from None
