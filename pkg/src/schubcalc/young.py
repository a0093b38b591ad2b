"""Young diagrams in a k x (n-k) rectangle and their equivalent encodings.

A subspace V of dimension k in C^n, positioned relative to a complete flag,
can be described three ways: by its rank table dim(V & F_j), by its jumping
numbers, or by a Young diagram fitting the k x (n-k) rectangle.  This module
converts between the three and implements the non-overlap test that decides
whether a product of two Schubert classes vanishes.

Diagrams are stored as bare partitions; the rectangle lives in
:class:`RectangleContext` and is checked at operation boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ValidationError

__all__ = [
    "YoungDiagram",
    "RectangleContext",
    "JumpingNumbers",
    "RankTable",
    "fits_in",
    "diagram_from_jumps",
    "jumps_from_diagram",
    "rank_table_from_jumps",
    "jumps_from_rank_table",
    "overlap_test",
    "overlap_rows",
    "complement",
    "render_overlap",
]


def _as_int_tuple(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError(f"{what} must be integers, got {v!r}")
        out.append(v)
    return tuple(out)


@total_ordering
@dataclass(frozen=True, init=False)
class YoungDiagram:
    """A partition lambda_1 >= lambda_2 >= ... >= 0 with trailing zeros dropped.

    Ordering is lexicographic on the normalized parts.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()) -> None:
        p = _as_int_tuple(parts, "diagram parts")
        if any(x < 0 for x in p):
            raise ValidationError(f"diagram parts must be nonnegative: {p}")
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValidationError(f"diagram parts must be weakly decreasing: {p}")
        while p and p[-1] == 0:
            p = p[:-1]
        object.__setattr__(self, "parts", p)

    @classmethod
    def parse(cls, text: str) -> YoungDiagram:
        """Parse comma-separated parts, e.g. ``"5,3,2,2,1"``; ``"0"`` is empty.

        Surrounding brackets are tolerated so that ``"[2,1]"`` also works.
        """
        s = text.strip().strip("[]()").strip()
        if not s:
            return cls()
        try:
            parts = [int(tok) for tok in s.split(",")]
        except ValueError:
            raise ValidationError(f"cannot parse diagram {text!r}: expected comma-separated integers") from None
        return cls(parts)

    @property
    def area(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part lambda_i, reading missing parts as 0."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, k: int) -> tuple[int, ...]:
        if k < self.length:
            raise ValidationError(f"{self} has more than {k} nonzero rows")
        return self.parts + (0,) * (k - self.length)

    def contains(self, other: YoungDiagram) -> bool:
        """Shape containment: other_i <= self_i for every row."""
        return other.length <= self.length and all(b <= a for a, b in zip(self.parts, other.parts))

    def conjugate(self) -> YoungDiagram:
        if not self.parts:
            return self
        return YoungDiagram(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))

    def __lt__(self, other: YoungDiagram) -> bool:
        if not isinstance(other, YoungDiagram):
            return NotImplemented
        return self.parts < other.parts

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def __repr__(self) -> str:
        return f"YoungDiagram({self.parts})"


@dataclass(frozen=True)
class RectangleContext:
    """The Grassmannian G_k(C^n), i.e. the k x (n-k) rectangle."""

    k: int
    n: int

    def __post_init__(self) -> None:
        _as_int_tuple((self.k, self.n), "rectangle dimensions")
        if not 1 <= self.k < self.n:
            raise ValidationError(f"need 1 <= k < n, got k={self.k}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.k

    @property
    def area(self) -> int:
        return self.k * self.width

    def full(self) -> YoungDiagram:
        return YoungDiagram((self.width,) * self.k)

    def diagrams(self, area: int | None = None) -> Iterator[YoungDiagram]:
        """All diagrams in the rectangle (optionally of one area).

        Generated from jump positions, so the order follows combinations of
        {1..n} and the total count is binomial(n, k).
        """
        for jumps in combinations(range(1, self.n + 1), self.k):
            lam = YoungDiagram(self.width - j + i for i, j in enumerate(jumps, start=1))
            if area is None or lam.area == area:
                yield lam

    def require_fit(self, lam: YoungDiagram) -> None:
        if not fits_in(lam, self):
            raise ValidationError(
                f"diagram {lam} does not fit the {self.k}x{self.width} rectangle of G({self.k},{self.n})"
            )

    def __str__(self) -> str:
        return f"G({self.k},{self.n})"


@dataclass(frozen=True)
class JumpingNumbers:
    """Strictly increasing indices j_1 < ... < j_k, all >= 1."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = _as_int_tuple(self.indices, "jumping numbers")
        object.__setattr__(self, "indices", idx)
        if any(j < 1 for j in idx):
            raise ValidationError(f"jumping numbers must be >= 1: {idx}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValidationError(f"jumping numbers must be strictly increasing: {idx}")

    def check(self, ctx: RectangleContext) -> None:
        if len(self.indices) != ctx.k:
            raise ValidationError(f"expected {ctx.k} jumping numbers, got {len(self.indices)}")
        if self.indices and self.indices[-1] > ctx.n:
            raise ValidationError(f"jumping number {self.indices[-1]} exceeds n={ctx.n}")

    def __str__(self) -> str:
        return ",".join(map(str, self.indices))


@dataclass(frozen=True)
class RankTable:
    """The values d_j = dim(V & F_j) for j = 0..n."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        v = _as_int_tuple(self.values, "rank table entries")
        object.__setattr__(self, "values", v)
        if not v or v[0] != 0:
            raise ValidationError(f"rank table must start at d_0 = 0: {v}")
        if any(b - a not in (0, 1) for a, b in zip(v, v[1:])):
            raise ValidationError(f"rank table must rise in steps of 0 or 1: {v}")

    @property
    def n(self) -> int:
        return len(self.values) - 1

    @property
    def k(self) -> int:
        return self.values[-1]

    def __str__(self) -> str:
        return ",".join(map(str, self.values))


def fits_in(lam: YoungDiagram, ctx: RectangleContext) -> bool:
    return lam.length <= ctx.k and (not lam.parts or lam.parts[0] <= ctx.width)


def diagram_from_jumps(jumps: JumpingNumbers, ctx: RectangleContext) -> YoungDiagram:
    """lambda_i = n - k - j_i + i."""
    jumps.check(ctx)
    return YoungDiagram(ctx.width - j + i for i, j in enumerate(jumps.indices, start=1))


def jumps_from_diagram(lam: YoungDiagram, ctx: RectangleContext) -> JumpingNumbers:
    ctx.require_fit(lam)
    return JumpingNumbers(tuple(ctx.width - p + i for i, p in enumerate(lam.padded(ctx.k), start=1)))


def rank_table_from_jumps(jumps: JumpingNumbers, ctx: RectangleContext) -> RankTable:
    jumps.check(ctx)
    js = set(jumps.indices)
    values = [0]
    for j in range(1, ctx.n + 1):
        values.append(values[-1] + (j in js))
    return RankTable(tuple(values))


def jumps_from_rank_table(table: RankTable) -> JumpingNumbers:
    v = table.values
    return JumpingNumbers(tuple(j for j in range(1, len(v)) if v[j] - v[j - 1] == 1))


def overlap_rows(lam: YoungDiagram, mu: YoungDiagram, ctx: RectangleContext) -> list[int]:
    """Rows i where lambda_i + mu_{k+1-i} > n - k (the figures collide)."""
    ctx.require_fit(lam)
    ctx.require_fit(mu)
    k = ctx.k
    return [i for i in range(1, k + 1) if lam.part(i) + mu.part(k + 1 - i) > ctx.width]


def overlap_test(lam: YoungDiagram, mu: YoungDiagram, ctx: RectangleContext) -> bool:
    """True when lambda and mu, rotated 180 degrees into the SE corner, do NOT overlap.

    Equivalently the cup product sigma_lambda * sigma_mu is nonzero.
    """
    return not overlap_rows(lam, mu, ctx)


def complement(lam: YoungDiagram, ctx: RectangleContext) -> YoungDiagram:
    """The complementary diagram mu_i = (n - k) - lambda_{k+1-i}."""
    ctx.require_fit(lam)
    k = ctx.k
    return YoungDiagram(ctx.width - lam.part(k + 1 - i) for i in range(1, k + 1))


def render_overlap(lam: YoungDiagram, mu: YoungDiagram, ctx: RectangleContext) -> str:
    """ASCII picture: ``#`` for lambda, ``o`` for rotated mu, ``X`` where both, ``.`` empty."""
    ctx.require_fit(lam)
    ctx.require_fit(mu)
    k, w = ctx.k, ctx.width
    lines = []
    for i in range(1, k + 1):
        row = []
        mu_len = mu.part(k + 1 - i)
        for c in range(w):
            a = c < lam.part(i)
            b = c >= w - mu_len
            row.append("X" if a and b else "#" if a else "o" if b else ".")
        lines.append("".join(row))
    return "\n".join(lines)


def as_diagram(value: YoungDiagram | Sequence[int] | str) -> YoungDiagram:
    """Coerce a tuple/list/text into a YoungDiagram."""
    if isinstance(value, YoungDiagram):
        return value
    if isinstance(value, str):
        return YoungDiagram.parse(value)
    return YoungDiagram(value)
