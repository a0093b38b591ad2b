"""Brute-force ground truth over small prime fields.

Everything here works by enumerating points of G_k(F_q^n) or of
Mat_{n x m}(F_q) outright; nothing is derived from the combinatorial
formulas in :mod:`schubcalc.young` or :mod:`schubcalc.ring`, which is what
makes the results usable for cross-validation.

Enumerations refuse to start when they would exceed a size budget.  The
default budget allows 2**20 objects with q in {2, 3, 5} and n <= 6; it can be
raised by passing ``budget=`` or by setting ``SCHUBERT_BUDGET``, either of
which also lifts the q and n caps.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .errors import BudgetExceededError, ValidationError
from .finite import FqFlag, FqMatrix, FqSubspace, is_prime, rref
from .young import (
    RankTable,
    RectangleContext,
    YoungDiagram,
    as_diagram,
    diagram_from_jumps,
    jumps_from_diagram,
    jumps_from_rank_table,
)

__all__ = [
    "DEFAULT_BUDGET",
    "gaussian_binomial",
    "enumerate_subspaces",
    "enumerate_matrices",
    "rank_table_of",
    "diagram_of",
    "CellCensus",
    "schubert_cell_census",
    "schubert_variety_members",
    "richardson_members",
    "richardson_nonempty",
    "richardson_census",
    "column_space",
    "column_space_census",
    "rank_census",
    "RankCensus",
    "fiber_census",
]

DEFAULT_BUDGET = 2**20
_MAX_Q = 5
_MAX_N = 6
_CHUNK = 2**18


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _check_budget(count: int, q: int, n: int, budget: int | None) -> None:
    if not is_prime(q):
        raise ValidationError(f"field size must be a prime, got {q}")
    env = os.environ.get("SCHUBERT_BUDGET")
    if budget is None and env:
        try:
            budget = int(env)
        except ValueError:
            raise ValidationError(f"SCHUBERT_BUDGET must be an integer, got {env!r}") from None
    if budget is None:
        if q > _MAX_Q:
            raise BudgetExceededError(f"q={q} exceeds the default limit q <= {_MAX_Q}")
        if n > _MAX_N:
            raise BudgetExceededError(f"n={n} exceeds the default limit n <= {_MAX_N}")
        budget = DEFAULT_BUDGET
    if count > budget:
        raise BudgetExceededError(f"enumeration of {count} objects exceeds the budget of {budget}")


def _validate_grassmannian(q: int, n: int, k: int) -> None:
    if n < 1 or not 0 <= k <= n:
        raise ValidationError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")


@lru_cache(maxsize=64)
def _subspaces(q: int, n: int, k: int) -> tuple[FqSubspace, ...]:
    out = []
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivot_set]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), v in zip(free, values):
                rows[i][c] = v
            out.append(FqSubspace.from_rref(q, n, tuple(tuple(r) for r in rows)))
    return tuple(out)


def enumerate_subspaces(q: int, n: int, k: int, *, budget: int | None = None) -> list[FqSubspace]:
    """All k-dimensional subspaces of F_q^n, each once, by RREF pivot pattern."""
    _validate_grassmannian(q, n, k)
    _check_budget(gaussian_binomial(n, k, q), q, n, budget)
    return list(_subspaces(q, n, k))


def enumerate_matrices(q: int, n: int, m: int, *, budget: int | None = None):
    """Yield every n x m matrix over F_q (q**(n*m) of them)."""
    if n < 1 or m < 1:
        raise ValidationError(f"matrix shape needs n, m >= 1, got {n}x{m}")
    _check_budget(q ** (n * m), q, n, budget)
    for entries in product(range(q), repeat=n * m):
        yield FqMatrix(q, [entries[i * m:(i + 1) * m] for i in range(n)])


# -- Schubert side -----------------------------------------------------------


def rank_table_of(V: FqSubspace, flag: FqFlag) -> RankTable:
    """dim(V & F_j) for j = 0..n, by exact elimination."""
    if (V.q, V.n) != (flag.q, flag.n):
        raise ValidationError(f"subspace of F_{V.q}^{V.n} does not match flag in F_{flag.q}^{flag.n}")
    return RankTable(tuple(V.intersection_dim(F) for F in flag.members))


def diagram_of(V: FqSubspace, flag: FqFlag) -> YoungDiagram:
    table = rank_table_of(V, flag)
    return diagram_from_jumps(jumps_from_rank_table(table), RectangleContext(V.dim, V.n))


def _ctx(n: int, k: int) -> RectangleContext:
    return RectangleContext(k, n)


def _tables(q: int, n: int, k: int, flag: FqFlag, budget: int | None) -> list[tuple[FqSubspace, RankTable]]:
    if (flag.q, flag.n) != (q, n):
        raise ValidationError("flag does not live in F_q^n")
    return [(V, rank_table_of(V, flag)) for V in enumerate_subspaces(q, n, k, budget=budget)]


def _diagram_order(lam: YoungDiagram):
    return (lam.area, tuple(-p for p in lam.parts))


@dataclass(frozen=True)
class CellCensus:
    """Point counts of the Schubert cells of G_k(F_q^n) for one flag."""

    q: int
    n: int
    k: int
    cells: tuple[tuple[YoungDiagram, int], ...]

    def as_dict(self) -> dict[YoungDiagram, int]:
        return dict(self.cells)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.cells)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "cells": [{"diagram": list(lam.parts), "count": c} for lam, c in self.cells],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> CellCensus:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            cells = tuple((YoungDiagram(c["diagram"]), c["count"]) for c in data["cells"])
            return cls(data["q"], data["n"], data["k"], cells)
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed census JSON: {exc}") from None


def schubert_cell_census(q: int, n: int, k: int, flag: FqFlag | None = None, *, budget: int | None = None) -> CellCensus:
    """Partition G_k(F_q^n) by Young diagram relative to ``flag`` (standard by default)."""
    _validate_grassmannian(q, n, k)
    flag = flag or FqFlag.standard(q, n)
    ctx = _ctx(n, k)
    counts = Counter(
        diagram_from_jumps(jumps_from_rank_table(t), ctx) for _, t in _tables(q, n, k, flag, budget)
    )
    cells = tuple(sorted(counts.items(), key=lambda kv: _diagram_order(kv[0])))
    return CellCensus(q, n, k, cells)


def _in_variety(table: RankTable, jumps: Sequence[int]) -> bool:
    return all(table.values[j] >= i for i, j in enumerate(jumps, start=1))


def schubert_variety_members(lam, flag: FqFlag, q: int, n: int, k: int, *, budget: int | None = None) -> list[FqSubspace]:
    """All V with dim(V & F_{j_i}) >= i, where j are the jumping numbers of lam."""
    _validate_grassmannian(q, n, k)
    jumps = jumps_from_diagram(as_diagram(lam), _ctx(n, k)).indices
    return [V for V, t in _tables(q, n, k, flag, budget) if _in_variety(t, jumps)]


def richardson_members(
    lam,
    mu,
    q: int,
    n: int,
    k: int,
    flag: FqFlag | None = None,
    other: FqFlag | None = None,
    *,
    budget: int | None = None,
) -> list[FqSubspace]:
    """Points of the Schubert variety of lam (for ``flag``) meeting that of mu (for ``other``).

    Defaults to the standard flag against the opposite flag.
    """
    _validate_grassmannian(q, n, k)
    flag = flag or FqFlag.standard(q, n)
    other = other or FqFlag.opposite(q, n)
    ctx = _ctx(n, k)
    ja = jumps_from_diagram(as_diagram(lam), ctx).indices
    jb = jumps_from_diagram(as_diagram(mu), ctx).indices
    out = []
    for V in enumerate_subspaces(q, n, k, budget=budget):
        if _in_variety(rank_table_of(V, flag), ja) and _in_variety(rank_table_of(V, other), jb):
            out.append(V)
    return out


def richardson_census(
    q: int,
    n: int,
    k: int,
    flag: FqFlag | None = None,
    other: FqFlag | None = None,
    *,
    budget: int | None = None,
) -> dict[tuple[YoungDiagram, YoungDiagram], int]:
    """Point counts of every Richardson intersection at once, keyed by (lam, mu).

    Each subspace is row-reduced against both flags once; membership in every
    Schubert variety is then read off its two rank tables.
    """
    _validate_grassmannian(q, n, k)
    flag = flag or FqFlag.standard(q, n)
    other = other or FqFlag.opposite(q, n)
    ctx = _ctx(n, k)
    diagrams = list(ctx.diagrams())
    jumps = {lam: jumps_from_diagram(lam, ctx).indices for lam in diagrams}
    in_a: dict[YoungDiagram, set[int]] = {lam: set() for lam in diagrams}
    in_b: dict[YoungDiagram, set[int]] = {lam: set() for lam in diagrams}
    for idx, V in enumerate(enumerate_subspaces(q, n, k, budget=budget)):
        ta, tb = rank_table_of(V, flag), rank_table_of(V, other)
        for lam in diagrams:
            if _in_variety(ta, jumps[lam]):
                in_a[lam].add(idx)
            if _in_variety(tb, jumps[lam]):
                in_b[lam].add(idx)
    return {(lam, mu): len(in_a[lam] & in_b[mu]) for lam in diagrams for mu in diagrams}


def richardson_nonempty(lam, mu, q: int, n: int, k: int, *, budget: int | None = None) -> bool:
    return bool(richardson_members(lam, mu, q, n, k, budget=budget))


# -- matrix side -------------------------------------------------------------


def column_space(A: FqMatrix) -> FqSubspace:
    return A.column_space()


def _batch_rref(X: np.ndarray, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Row-reduce a stack of matrices mod q in place; returns (rref, rank)."""
    B, R, C = X.shape
    inv = np.zeros(q, dtype=X.dtype)
    for a in range(1, q):
        inv[a] = pow(a, -1, q)
    r = np.zeros(B, dtype=np.int64)
    rows = np.arange(R)
    for c in range(C):
        cand = (X[:, :, c] != 0) & (rows[None, :] >= r[:, None])
        has = cand.any(axis=1)
        b = np.nonzero(has)[0]
        if b.size == 0:
            continue
        p = cand[b].argmax(axis=1)
        rp = r[b]
        pivot_row = X[b, p].copy()
        X[b, p] = X[b, rp]
        pivot_row = pivot_row * inv[pivot_row[:, c]][:, None] % q
        X[b, rp] = pivot_row
        factor = X[b, :, c].copy()
        factor[np.arange(b.size), rp] = 0
        X[b] = (X[b] - factor[:, :, None] * pivot_row[:, None, :]) % q
        r[b] += 1
    return X, r


@lru_cache(maxsize=32)
def _column_space_counts_enumerated(q: int, n: int, m: int) -> tuple[tuple[FqSubspace, int], ...]:
    # Literal enumeration: decode every matrix index, reduce A^T in batches.
    total = q ** (n * m)
    digits = q ** np.arange(n * m, dtype=np.int64)
    merged: Counter = Counter()
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        A = ((codes[:, None] // digits[None, :]) % q).reshape(-1, n, m)
        # column space of A is the row space of A^T
        T, _ = _batch_rref(np.ascontiguousarray(A.transpose(0, 2, 1)), q)
        keys = T.reshape(len(codes), -1) @ digits
        uniq, counts = np.unique(keys, return_counts=True)
        merged.update(dict(zip(uniq.tolist(), counts.tolist())))
    out = []
    for key, count in merged.items():
        flat = [(key // q**i) % q for i in range(m * n)]
        basis = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(m) if any(flat[i * n:(i + 1) * n]))
        out.append((FqSubspace.from_rref(q, n, basis), count))
    return tuple(sorted(out, key=lambda t: (t[0].dim, t[0].basis)))


@lru_cache(maxsize=32)
def _column_space_counts_transfer(q: int, n: int, m: int) -> tuple[tuple[FqSubspace, int], ...]:
    # Build matrices one column at a time.  After j columns, counts[W] is the
    # number of j-column prefixes spanning W; every one of the q**n choices of
    # the next column is applied, so each matrix is counted exactly once.
    vectors = list(product(range(q), repeat=n))
    zero = FqSubspace(q, n)
    counts: Counter = Counter({zero: 1})
    for _ in range(m):
        step: Counter = Counter()
        for W, c in counts.items():
            for v in vectors:
                step[FqSubspace.from_rref(q, n, rref(W.basis + (v,), q))] += c
        counts = step
    return tuple(sorted(counts.items(), key=lambda t: (t[0].dim, t[0].basis)))


def column_space_census(
    q: int, n: int, m: int, *, budget: int | None = None, method: str = "transfer"
) -> dict[FqSubspace, int]:
    """Group all q**(n*m) matrices by column space.

    ``method="enumerate"`` decodes and row-reduces every matrix individually
    (vectorized); ``"transfer"`` sweeps columns left to right and tallies the
    running span.  Both count every matrix once and must agree exactly.
    """
    if n < 1 or m < 1:
        raise ValidationError(f"matrix shape needs n, m >= 1, got {n}x{m}")
    _check_budget(q ** (n * m), q, n, budget)
    if method == "transfer":
        return dict(_column_space_counts_transfer(q, n, m))
    if method == "enumerate":
        return dict(_column_space_counts_enumerated(q, n, m))
    raise ValidationError(f"unknown census method {method!r}")


@dataclass(frozen=True)
class RankCensus:
    q: int
    n: int
    m: int
    ranks: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.ranks)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "m": self.m,
            "ranks": [{"rank": r, "count": c} for r, c in self.ranks],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> RankCensus:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(data["q"], data["n"], data["m"], tuple((d["rank"], d["count"]) for d in data["ranks"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed census JSON: {exc}") from None


def rank_census(q: int, n: int, m: int, *, budget: int | None = None, method: str = "transfer") -> RankCensus:
    """Number of n x m matrices over F_q of each rank."""
    counts: Counter = Counter()
    for V, c in column_space_census(q, n, m, budget=budget, method=method).items():
        counts[V.dim] += c
    return RankCensus(q, n, m, tuple(sorted(counts.items())))


def fiber_census(V: FqSubspace, q: int, n: int, m: int, *, budget: int | None = None) -> int:
    """Number of n x m matrices whose column space is exactly V."""
    if (V.q, V.n) != (q, n):
        raise ValidationError(f"subspace of F_{V.q}^{V.n} does not live in F_{q}^{n}")
    return column_space_census(q, n, m, budget=budget).get(V, 0)
