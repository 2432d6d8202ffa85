"""Reader for the vortexforce CSV dataset format.

The format is consumed purely through the documented file layout:
'#'-prefixed ``key = value`` provenance lines, one column-name row, then
comma-separated data.  This package never imports the producer.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

EXPECTED_SCHEMA = "vortexforce-sweep"
EXPECTED_SCHEMA_VERSION = "1"


class DatasetError(Exception):
    """The input file cannot be used for rendering."""


class SchemaMismatchError(DatasetError):
    """Schema tag or version differs from what this package understands."""


@dataclass
class Dataset:
    path: str
    header: dict[str, str]
    columns: dict[str, np.ndarray]

    def require(self, *names: str) -> None:
        missing = [n for n in names if n not in self.columns]
        if missing:
            present = ", ".join(sorted(self.columns))
            raise DatasetError(
                f"{self.path}: missing columns {', '.join(missing)} (present: {present})"
            )

    def select(self, **where: float) -> "Dataset":
        """Rows where each named column equals the given value exactly."""
        self.require(*where)
        mask = np.ones(len(next(iter(self.columns.values()))), dtype=bool)
        for name, value in where.items():
            mask &= self.columns[name] == value
        return Dataset(
            path=self.path,
            header=self.header,
            columns={name: col[mask] for name, col in self.columns.items()},
        )

    def unique(self, name: str) -> np.ndarray:
        self.require(name)
        return np.unique(self.columns[name])

    def __len__(self) -> int:
        return len(next(iter(self.columns.values())))


def read_dataset(path: str | Path) -> Dataset:
    path = str(path)
    header: dict[str, str] = {}
    names: list[str] | None = None
    data: list[list[float]] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                key, sep, value = line[1:].strip().partition(" = ")
                if sep:
                    header[key] = value
                continue
            if names is None:
                names = line.split(",")
                continue
            data.append([float(cell) for cell in line.split(",")])
    if header.get("schema") != EXPECTED_SCHEMA or header.get("schema_version") != EXPECTED_SCHEMA_VERSION:
        raise SchemaMismatchError(
            f"{path}: expected schema {EXPECTED_SCHEMA}/{EXPECTED_SCHEMA_VERSION}, got "
            f"{header.get('schema')!r}/{header.get('schema_version')!r}"
        )
    if names is None:
        raise DatasetError(f"{path}: no column header row")
    if not data:
        raise DatasetError(f"{path}: dataset has no rows")
    matrix = np.asarray(data, dtype=float)
    return Dataset(
        path=path,
        header=header,
        columns={name: matrix[:, i] for i, name in enumerate(names)},
    )
