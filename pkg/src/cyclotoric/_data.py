"""Locate the schema and golden-file directories that ship with the repo.

The package is developed and exercised from a checkout where ``schemas/``
and ``golden/`` sit at the repository root, two levels above this file
(src layout).  The CYCLOTORIC_DATA_DIR environment variable overrides the
search, which both supports installed trees and lets tests point the tools
at doctored data.
"""

from __future__ import annotations

import os
from pathlib import Path


def data_root() -> Path:
    """Directory containing schemas/ and golden/, or raise with guidance."""
    override = os.environ.get("CYCLOTORIC_DATA_DIR")
    if override:
        root = Path(override)
        if not root.is_dir():
            raise FileNotFoundError(
                f"CYCLOTORIC_DATA_DIR={override!r} is not a directory")
        return root
    here = Path(__file__).resolve()
    for candidate in here.parents:
        if (candidate / "schemas").is_dir() and (candidate / "golden").is_dir():
            return candidate
    raise FileNotFoundError(
        "could not locate the schemas/ and golden/ directories; "
        "set CYCLOTORIC_DATA_DIR to the directory containing them")


def schema_path(name: str) -> Path:
    return data_root() / "schemas" / name


def golden_path(name: str) -> Path:
    return data_root() / "golden" / name
