"""Exact Euler and Bernoulli number tables with a JSON cache format.

Both families are generated by their classical binomial recurrences:

* Euler numbers:  sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0 for n >= 1, E_0 = 1.
  Odd-index Euler numbers are identically zero and are not stored.
* Bernoulli numbers:  sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1,
  run over even indices only with the single odd contribution B_1 = -1/2
  folded in (all other odd Bernoulli numbers vanish).

Tables are immutable snapshots; generation is inherently serial but can
extend an existing table, and :class:`TableStore` layers lazy growth with a
hard cap plus optional directory persistence on top.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .exact_core import binomial

__all__ = [
    "CACHE_FORMAT",
    "BernoulliTable",
    "CacheError",
    "EulerTable",
    "TableDepthError",
    "TableStore",
    "bernoulli_numbers",
    "euler_numbers",
    "load_cache",
    "save_cache",
]

CACHE_FORMAT = "piforge-numbers/1"


class CacheError(ValueError):
    """A number-cache file is corrupt or does not match the expected layout."""


class TableDepthError(LookupError):
    """A computation needs a deeper table than is available or permitted."""

    def __init__(self, kind: str, required_index: int, cap: int | None = None):
        self.kind = kind
        self.required_index = required_index
        self.cap = cap
        message = f"{kind} table must cover index {required_index}"
        if cap is not None:
            message += f" but the hard cap is {cap}"
        super().__init__(message)


@dataclass(frozen=True)
class EulerTable:
    """E_0, E_2, ..., E_{2K}; ``values[k]`` is E_{2k}."""

    values: tuple[int, ...]

    @property
    def max_index(self) -> int:
        return 2 * (len(self.values) - 1)

    def covers(self, index: int) -> bool:
        return 0 <= index <= self.max_index

    def entry(self, index: int) -> int:
        """E_index for an even index within the table."""
        if index % 2 != 0:
            raise ValueError("odd-index Euler numbers are zero and not stored")
        if not self.covers(index):
            raise TableDepthError("euler", index)
        return self.values[index // 2]


@dataclass(frozen=True)
class BernoulliTable:
    """B_0, B_2, ..., B_{2K} plus B_1; ``values[k]`` is B_{2k}."""

    values: tuple[Fraction, ...]
    b1: Fraction = field(default=Fraction(-1, 2))

    @property
    def max_index(self) -> int:
        return 2 * (len(self.values) - 1)

    def covers(self, index: int) -> bool:
        return 0 <= index <= self.max_index

    def entry(self, index: int) -> Fraction:
        """B_index for index 1 or an even index within the table."""
        if index == 1:
            return self.b1
        if index % 2 != 0:
            return Fraction(0)
        if not self.covers(index):
            raise TableDepthError("bernoulli", index)
        return self.values[index // 2]


def euler_numbers(K: int, *, base: EulerTable | None = None) -> EulerTable:
    """Exact table of E_0 .. E_{2K}, optionally extending ``base``."""
    if K < 0:
        raise ValueError("K must be >= 0")
    vals: list[int] = list(base.values[: K + 1]) if base is not None else [1]
    if not vals or vals[0] != 1:
        raise ValueError("base table must start with E_0 = 1")
    for n in range(len(vals), K + 1):
        acc = 0
        for j in range(n):
            acc += binomial(2 * n, 2 * j) * vals[j]
        vals.append(-acc)
    return EulerTable(tuple(vals))


def bernoulli_numbers(K: int, *, base: BernoulliTable | None = None) -> BernoulliTable:
    """Exact table of B_0 .. B_{2K} (even indices) plus B_1 = -1/2."""
    if K < 0:
        raise ValueError("K must be >= 0")
    vals: list[Fraction] = (
        list(base.values[: K + 1]) if base is not None else [Fraction(1)]
    )
    if not vals or vals[0] != 1:
        raise ValueError("base table must start with B_0 = 1")
    for m in range(len(vals), K + 1):
        n = 2 * m
        acc = Fraction(n + 1, -2)  # C(n+1, 1) * B_1
        for j in range(m):
            acc += binomial(n + 1, 2 * j) * vals[j]
        vals.append(-acc / (n + 1))
    return BernoulliTable(tuple(vals))


# -- cache files ---------------------------------------------------------------


def _table_rows(table: EulerTable | BernoulliTable) -> list[list]:
    rows: list[list] = []
    if isinstance(table, EulerTable):
        for k, value in enumerate(table.values):
            rows.append([2 * k, str(value), "1"])
        return rows
    rows.append([0, str(table.values[0].numerator), str(table.values[0].denominator)])
    rows.append([1, str(table.b1.numerator), str(table.b1.denominator)])
    for k, value in enumerate(table.values[1:], start=1):
        rows.append([2 * k, str(value.numerator), str(value.denominator)])
    return rows


def save_cache(table: EulerTable | BernoulliTable, path: str | os.PathLike) -> None:
    """Write a table as versioned JSON; round-trips bit-exactly."""
    kind = "euler" if isinstance(table, EulerTable) else "bernoulli"
    payload = {
        "format": CACHE_FORMAT,
        "kind": kind,
        "max_index": table.max_index,
        "values": _table_rows(table),
    }
    Path(path).write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")


def _cache_fail(path, where: str, problem: str) -> CacheError:
    return CacheError(f"{path}: {problem} (at {where})")


def load_cache(path: str | os.PathLike) -> EulerTable | BernoulliTable:
    """Read a table back; corrupt or mismatched files raise CacheError with
    the offending position (byte offset for syntax errors)."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CacheError(f"{path}: {exc.msg} at byte {exc.pos}") from exc
    if not isinstance(payload, dict):
        raise _cache_fail(path, "top level", "expected a JSON object")
    if payload.get("format") != CACHE_FORMAT:
        raise _cache_fail(
            path, "format", f"unsupported format {payload.get('format')!r}"
        )
    kind = payload.get("kind")
    if kind not in ("euler", "bernoulli"):
        raise _cache_fail(path, "kind", f"unknown kind {kind!r}")
    rows = payload.get("values")
    if not isinstance(rows, list) or not rows:
        raise _cache_fail(path, "values", "expected a non-empty array")
    entries: dict[int, Fraction] = {}
    previous = -1
    for i, row in enumerate(rows):
        where = f"values[{i}]"
        if not (isinstance(row, list) and len(row) == 3):
            raise _cache_fail(path, where, "expected [index, num, den]")
        index, num, den = row
        if not isinstance(index, int) or not isinstance(num, str) or not isinstance(den, str):
            raise _cache_fail(path, where, "expected integer index and string digits")
        if index <= previous:
            raise _cache_fail(path, where, "indices must be strictly ascending")
        previous = index
        try:
            value = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise _cache_fail(path, where, f"bad rational: {exc}") from exc
        entries[index] = value
    max_index = payload.get("max_index")
    deepest = max((i for i in entries if i % 2 == 0), default=-1)
    if max_index != deepest:
        raise _cache_fail(
            path, "max_index", f"declared {max_index!r} but rows reach {deepest}"
        )
    if kind == "euler":
        expected = list(range(0, max_index + 1, 2))
        if sorted(entries) != expected:
            raise _cache_fail(path, "values", "euler tables hold even indices only")
        ints = []
        for index in expected:
            value = entries[index]
            if value.denominator != 1:
                raise _cache_fail(path, f"index {index}", "euler entries are integers")
            ints.append(value.numerator)
        return EulerTable(tuple(ints))
    expected = [0, 1] + list(range(2, max_index + 1, 2))
    if sorted(entries) != expected:
        raise _cache_fail(
            path, "values", "bernoulli tables hold index 1 plus even indices"
        )
    evens = tuple(entries[index] for index in range(0, max_index + 1, 2))
    return BernoulliTable(evens, b1=entries[1])


# -- lazy provider --------------------------------------------------------------


class TableStore:
    """Serves tables of at least the requested depth, growing lazily.

    Growth extends the deepest table seen so far (never recomputing the
    prefix) and stops at ``max_index_cap``; deeper requests raise
    :class:`TableDepthError`.  When ``cache_dir`` is set, tables found there
    seed the store and every extension is written back.  Completed tables are
    immutable, so concurrent readers are safe; growth is serialized.
    """

    def __init__(
        self,
        *,
        max_index_cap: int = 512,
        cache_dir: str | os.PathLike | None = None,
    ):
        if max_index_cap < 0:
            raise ValueError("max_index_cap must be >= 0")
        self.max_index_cap = max_index_cap
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        self._euler: EulerTable | None = None
        self._bernoulli: BernoulliTable | None = None
        self._lock = threading.Lock()

    def _cache_path(self, kind: str) -> Path | None:
        if self.cache_dir is None:
            return None
        return self.cache_dir / f"{kind}.json"

    def _load_seed(self, kind: str) -> EulerTable | BernoulliTable | None:
        path = self._cache_path(kind)
        if path is None or not path.exists():
            return None
        table = load_cache(path)
        wanted = EulerTable if kind == "euler" else BernoulliTable
        if not isinstance(table, wanted):
            raise CacheError(f"{path}: expected a {kind} table")
        return table

    def _persist(self, kind: str, table: EulerTable | BernoulliTable) -> None:
        path = self._cache_path(kind)
        if path is None:
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        save_cache(table, path)

    def euler(self, K: int) -> EulerTable:
        if 2 * K > self.max_index_cap:
            raise TableDepthError("euler", 2 * K, self.max_index_cap)
        with self._lock:
            if self._euler is None:
                self._euler = self._load_seed("euler")
            have = self._euler
            if have is None or have.max_index < 2 * K:
                self._euler = euler_numbers(K, base=have)
                self._persist("euler", self._euler)
            return self._euler

    def bernoulli(self, K: int) -> BernoulliTable:
        if 2 * K > self.max_index_cap:
            raise TableDepthError("bernoulli", 2 * K, self.max_index_cap)
        with self._lock:
            if self._bernoulli is None:
                self._bernoulli = self._load_seed("bernoulli")
            have = self._bernoulli
            if have is None or have.max_index < 2 * K:
                self._bernoulli = bernoulli_numbers(K, base=have)
                self._persist("bernoulli", self._bernoulli)
            return self._bernoulli
