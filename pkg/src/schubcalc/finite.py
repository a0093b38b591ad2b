"""Exact linear algebra over a prime field F_q.

Vectors are tuples of residues in [0, q).  Subspaces are kept in reduced row
echelon form so two subspaces are equal exactly when their bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ValidationError

__all__ = [
    "is_prime",
    "PrimeFieldElement",
    "rref",
    "FqSubspace",
    "FqMatrix",
    "FqFlag",
]

Vector = tuple[int, ...]


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _require_prime(q: int) -> None:
    if isinstance(q, bool) or not isinstance(q, int) or not is_prime(q):
        raise ValidationError(f"field size must be a prime, got {q!r}")


@dataclass(frozen=True)
class PrimeFieldElement:
    value: int
    q: int

    def __post_init__(self) -> None:
        _require_prime(self.q)
        object.__setattr__(self, "value", self.value % self.q)

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.q != self.q:
                raise ValidationError(f"cannot mix F_{self.q} and F_{other.q}")
            return other.value
        if isinstance(other, int):
            return other
        raise TypeError(other)

    def __add__(self, other):
        return PrimeFieldElement(self.value + self._coerce(other), self.q)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElement(self.value - self._coerce(other), self.q)

    def __rsub__(self, other):
        return PrimeFieldElement(self._coerce(other) - self.value, self.q)

    def __mul__(self, other):
        return PrimeFieldElement(self.value * self._coerce(other), self.q)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.q)

    def inverse(self) -> PrimeFieldElement:
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return PrimeFieldElement(pow(self.value, -1, self.q), self.q)

    def __truediv__(self, other):
        return self * PrimeFieldElement(self._coerce(other), self.q).inverse()

    def __int__(self) -> int:
        return self.value


def rref(rows: Iterable[Sequence[int]], q: int) -> tuple[Vector, ...]:
    """Nonzero rows of the reduced row echelon form of ``rows`` mod q."""
    mat = [[x % q for x in r] for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot_row = 0
    for c in range(ncols):
        p = next((i for i in range(pivot_row, len(mat)) if mat[i][c]), None)
        if p is None:
            continue
        mat[pivot_row], mat[p] = mat[p], mat[pivot_row]
        inv = pow(mat[pivot_row][c], -1, q)
        prow = [x * inv % q for x in mat[pivot_row]]
        mat[pivot_row] = prow
        for i in range(len(mat)):
            if i != pivot_row and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % q for a, b in zip(mat[i], prow)]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return tuple(tuple(r) for r in mat[:pivot_row])


@dataclass(frozen=True, init=False)
class FqSubspace:
    """A subspace of F_q^n, stored by its RREF basis."""

    q: int
    n: int
    basis: tuple[Vector, ...]

    def __init__(self, q: int, n: int, vectors: Iterable[Sequence[int]] = ()) -> None:
        _require_prime(q)
        if n < 0:
            raise ValidationError(f"ambient dimension must be >= 0, got {n}")
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise ValidationError(f"vector {v} does not live in F_{q}^{n}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", rref(vecs, q))

    @classmethod
    def from_rref(cls, q: int, n: int, basis: tuple[Vector, ...]) -> FqSubspace:
        """Trusted constructor for a basis already in canonical form."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "q", q)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "basis", basis)
        return obj

    @classmethod
    def coordinate(cls, q: int, n: int, indices: Iterable[int]) -> FqSubspace:
        """Span of the standard basis vectors e_i for the given 1-based indices."""
        return cls(q, n, [tuple(int(j == i) for j in range(1, n + 1)) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: FqSubspace) -> None:
        if (self.q, self.n) != (other.q, other.n):
            raise ValidationError(f"subspaces of F_{self.q}^{self.n} and F_{other.q}^{other.n} are incompatible")

    def __add__(self, other: FqSubspace) -> FqSubspace:
        self._check(other)
        return FqSubspace(self.q, self.n, self.basis + other.basis)

    def intersection_dim(self, other: FqSubspace) -> int:
        self._check(other)
        return self.dim + other.dim - len(rref(self.basis + other.basis, self.q))

    def contains(self, other: FqSubspace) -> bool:
        return self.intersection_dim(other) == other.dim

    def __str__(self) -> str:
        inner = "; ".join("".join(map(str, v)) for v in self.basis)
        return f"<{inner}>"


@dataclass(frozen=True, init=False)
class FqMatrix:
    """An n x m matrix over F_q (n rows, m columns)."""

    q: int
    rows: tuple[Vector, ...]

    def __init__(self, q: int, rows: Iterable[Sequence[int]]) -> None:
        _require_prime(q)
        rs = tuple(tuple(x % q for x in r) for r in rows)
        if not rs or not rs[0]:
            raise ValidationError("matrix dimensions must be positive")
        if any(len(r) != len(rs[0]) for r in rs):
            raise ValidationError("ragged matrix rows")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "rows", rs)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    def columns(self) -> tuple[Vector, ...]:
        return tuple(zip(*self.rows))

    def rank(self) -> int:
        """Rank by row elimination of the matrix itself."""
        return len(rref(self.rows, self.q))

    def column_space(self) -> FqSubspace:
        return FqSubspace(self.q, self.n, self.columns())


@dataclass(frozen=True)
class FqFlag:
    """A complete flag F_0 < F_1 < ... < F_n with dim F_j = j."""

    members: tuple[FqSubspace, ...]

    def __post_init__(self) -> None:
        ms = self.members
        if not ms:
            raise ValidationError("a flag needs at least F_0")
        n = len(ms) - 1
        for j, f in enumerate(ms):
            if f.n != n or f.q != ms[0].q:
                raise ValidationError(f"flag member {j} lives in the wrong ambient space")
            if f.dim != j:
                raise ValidationError(f"flag member F_{j} has dimension {f.dim}")
            if j and not f.contains(ms[j - 1]):
                raise ValidationError(f"F_{j - 1} is not contained in F_{j}")

    @property
    def n(self) -> int:
        return len(self.members) - 1

    @property
    def q(self) -> int:
        return self.members[0].q

    def __getitem__(self, j: int) -> FqSubspace:
        return self.members[j]

    @classmethod
    def from_basis(cls, q: int, vectors: Sequence[Sequence[int]]) -> FqFlag:
        """F_j = span of the first j vectors."""
        n = len(vectors)
        return cls(tuple(FqSubspace(q, n, vectors[:j]) for j in range(n + 1)))

    @classmethod
    def standard(cls, q: int, n: int) -> FqFlag:
        """F_j = span(e_1, ..., e_j)."""
        return cls(tuple(FqSubspace.coordinate(q, n, range(1, j + 1)) for j in range(n + 1)))

    @classmethod
    def opposite(cls, q: int, n: int) -> FqFlag:
        """G_j = span(e_n, ..., e_{n-j+1})."""
        return cls(tuple(FqSubspace.coordinate(q, n, range(n - j + 1, n + 1)) for j in range(n + 1)))
