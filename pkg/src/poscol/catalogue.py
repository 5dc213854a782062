"""Access to the shipped graph6 catalogues and other data fixtures."""

from __future__ import annotations

import hashlib
from importlib import resources

from .errors import GraphInputError
from .graph6 import graph6_decode
from .graphs import Graph

MAX_CATALOGUE_ORDER = 7


def _data(name: str) -> bytes:
    ref = resources.files("poscol").joinpath("data", name)
    try:
        return ref.read_bytes()
    except FileNotFoundError:
        raise GraphInputError(f"missing data fixture {name!r}") from None


def catalogue_lines(n: int) -> list[str]:
    """graph6 lines for all nonisomorphic graphs of order ``n`` (1..7)."""
    if not 1 <= n <= MAX_CATALOGUE_ORDER:
        raise GraphInputError(f"catalogues cover 1 <= n <= {MAX_CATALOGUE_ORDER}")
    return _data(f"graphs{n}.g6").decode().split()


def graphs_of_order(n: int) -> list[Graph]:
    return [graph6_decode(line) for line in catalogue_lines(n)]


def fig6_cnf_text() -> str:
    return _data("fig6.cnf").decode()


def verify_checksums() -> dict[str, bool]:
    """Recompute SHA-256 of every data fixture against the shipped manifest."""
    out: dict[str, bool] = {}
    for line in _data("SHA256SUMS").decode().splitlines():
        digest, name = line.split()
        actual = hashlib.sha256(_data(name)).hexdigest()
        out[name] = actual == digest
    return out
