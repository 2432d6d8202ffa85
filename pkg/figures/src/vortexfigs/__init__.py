"""Deterministic figure rendering for vortexforce sweep datasets."""

__version__ = "0.1.0"

from .reader import Dataset, DatasetError, SchemaMismatchError, read_dataset
from .recipes import RECIPES, render

__all__ = [
    "Dataset",
    "DatasetError",
    "SchemaMismatchError",
    "read_dataset",
    "RECIPES",
    "render",
]
