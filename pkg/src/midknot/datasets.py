"""Dataset parsing and built-in fixtures.

Two wire formats are accepted: CSV with the exact header ``tau,F`` and one
``abscissa,value`` pair per row, and JSON objects ``{"tau": [...], "F":
[...], "name"?: str}``.  Parsing validates shape only as far as a dataset
is concerned (numeric, finite, paired, strictly increasing); grid-level
requirements such as the minimum site count are enforced when the dataset
is turned into a grid.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, NotStrictlyIncreasing, ParseError
from .grid import PrimaryGrid


@dataclass(frozen=True)
class DataSet:
    """Validated (tau, F) records, optionally named."""

    tau: tuple[float, ...]
    F: tuple[float, ...]
    name: str | None = None

    @property
    def records(self) -> list[tuple[float, float]]:
        return list(zip(self.tau, self.F))

    def grid(self) -> PrimaryGrid:
        return PrimaryGrid(tau=np.array(self.tau), F=np.array(self.F))


def validate_series(tau: list[float], F: list[float], name: str | None) -> DataSet:
    if len(tau) != len(F):
        raise LengthMismatch(
            f"tau has {len(tau)} entries but F has {len(F)}"
        )
    for k, v in enumerate(tau):
        if not math.isfinite(v):
            raise ParseError(f"tau_{k + 1} is not finite", index=k + 1)
    for k, v in enumerate(F):
        if not math.isfinite(v):
            raise ParseError(f"F_{k + 1} is not finite", index=k + 1)
    for k in range(1, len(tau)):
        if not tau[k] > tau[k - 1]:
            raise NotStrictlyIncreasing(
                f"tau_{k + 1} = {tau[k]!r} does not exceed"
                f" tau_{k} = {tau[k - 1]!r}",
                index=k + 1,
            )
    return DataSet(tau=tuple(tau), F=tuple(F), name=name)


def _parse_csv(text: str) -> DataSet:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty CSV document") from None
    if [c.strip() for c in header] != ["tau", "F"]:
        raise ParseError(
            f"CSV header must be 'tau,F', got {','.join(header)!r}"
        )
    tau: list[float] = []
    F: list[float] = []
    for row_no, row in enumerate(reader, start=1):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            raise ParseError(
                f"row {row_no} has {len(row)} fields, expected 2",
                index=row_no,
            )
        try:
            tau.append(float(row[0]))
            F.append(float(row[1]))
        except ValueError:
            raise ParseError(
                f"row {row_no} is not a pair of numbers: {row!r}",
                index=row_no,
            ) from None
    return validate_series(tau, F, None)


def coerce_number_list(obj, key: str) -> list[float]:
    if not isinstance(obj, list):
        raise ParseError(f"{key!r} must be an array of numbers")
    out = []
    for k, v in enumerate(obj):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ParseError(
                f"{key}[{k}] is not a number: {v!r}", index=k + 1
            )
        out.append(float(v))
    return out


def _parse_json(text: str) -> DataSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("JSON dataset must be an object")
    for key in ("tau", "F"):
        if key not in doc:
            raise ParseError(f"JSON dataset is missing {key!r}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    tau = coerce_number_list(doc["tau"], "tau")
    F = coerce_number_list(doc["F"], "F")
    return validate_series(tau, F, name)


def parse_dataset(data: bytes | str, format: str) -> DataSet:
    """Parse a dataset document in the given format ("csv" or "json")."""
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from None
    else:
        text = data
    if format == "csv":
        return _parse_csv(text)
    if format == "json":
        return _parse_json(text)
    raise ParseError(f"unknown dataset format {format!r}")


@dataclass(frozen=True)
class Fixture:
    """A named dataset bundled with preset secondary-knot layouts."""

    dataset: DataSet
    presets: dict[str, tuple[float, ...]]


# Monotone sigmoid-like data on a strongly graded grid; the two presets
# differ only in the two knots x_7 and x_8 over the long right-hand
# intervals (exp2 pulls both close to their interval's left end).
_FC_DATASET = DataSet(
    name="fritsch-carlson",
    tau=(7.99, 8.09, 8.19, 8.7, 9.2, 10.0, 12.0, 15.0, 20.0),
    F=(0.0, 0.0000276429, 0.0437498, 0.169183, 0.469428,
       0.94374, 0.998636, 0.999919, 0.999994),
)

_FIXTURES: dict[str, Fixture] = {
    "fritsch-carlson": Fixture(
        dataset=_FC_DATASET,
        presets={
            "exp1": (7.99, 8.14, 8.445, 8.95, 9.6, 11.0, 13.5, 20.0),
            "exp2": (7.99, 8.14, 8.445, 8.95, 9.6, 10.1, 12.1, 20.0),
        },
    ),
}


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)


def get_fixture(name: str) -> Fixture:
    """Look up a built-in fixture; raises KeyError for unknown names."""
    return _FIXTURES[name]
