"""The ring A*(k, n): integer combinations of diagrams in the k x (n-k) rectangle.

The cup product of two Schubert classes expands with Littlewood-Richardson
coefficients; terms whose diagram leaves the rectangle are discarded.
Coefficients are counted by exhaustive enumeration of LR skew tableaux.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import ContextMismatchError, ValidationError
from .young import RectangleContext, YoungDiagram, as_diagram

__all__ = [
    "CohomologyClass",
    "lr_coefficient",
    "cup",
    "cup_nonzero",
    "duality_coefficient",
    "basis_product",
]


@lru_cache(maxsize=None)
def _lr_count(lam: YoungDiagram, mu: YoungDiagram, nu: YoungDiagram) -> int:
    # Cells of nu/lam in reading order: rows top to bottom, each row right to left.
    lam_p = lam.padded(nu.length)
    cells = [(r, c) for r in range(nu.length) for c in range(nu.parts[r] - 1, lam_p[r] - 1, -1)]
    content = mu.parts
    letters = len(content)
    counts = [0] * (letters + 1)
    filling: dict[tuple[int, int], int] = {}

    def place(pos: int) -> int:
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        hi = letters
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        total = 0
        for x in range(lo, hi + 1):
            if counts[x] >= content[x - 1]:
                continue
            if x > 1 and counts[x] + 1 > counts[x - 1]:
                continue
            counts[x] += 1
            filling[(r, c)] = x
            total += place(pos + 1)
            del filling[(r, c)]
            counts[x] -= 1
        return total

    return place(0)


def lr_coefficient(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam, mu}.

    Counts semistandard fillings of the skew shape nu/lam with content mu
    whose reverse reading word is a lattice word.  Degenerate inputs
    (area mismatch, non-contained shapes) give 0.
    """
    lam, mu, nu = as_diagram(lam), as_diagram(mu), as_diagram(nu)
    if nu.area != lam.area + mu.area:
        return 0
    if not (nu.contains(lam) and nu.contains(mu)):
        return 0
    return _lr_count(lam, mu, nu)


_TERM_RE = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?\[([0-9,\s]*)\]\s*")


@dataclass(frozen=True, init=False)
class CohomologyClass:
    """An element of A*(k, n).

    ``terms`` holds (diagram, coefficient) pairs with nonzero coefficients,
    sorted by descending lexicographic order of the diagram parts.
    """

    terms: tuple[tuple[YoungDiagram, int], ...]
    context: RectangleContext

    def __init__(self, terms: Mapping[YoungDiagram, int] | Iterable[tuple[YoungDiagram, int]], context: RectangleContext):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[YoungDiagram, int] = {}
        for lam, c in items:
            lam = as_diagram(lam)
            if isinstance(c, bool) or not isinstance(c, int):
                raise ValidationError(f"coefficients must be integers, got {c!r}")
            context.require_fit(lam)
            acc[lam] = acc.get(lam, 0) + c
        canon = tuple(sorted(((lam, c) for lam, c in acc.items() if c), key=lambda t: t[0], reverse=True))
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "context", context)

    @classmethod
    def sigma(cls, lam, context: RectangleContext) -> CohomologyClass:
        return cls({as_diagram(lam): 1}, context)

    @classmethod
    def zero(cls, context: RectangleContext) -> CohomologyClass:
        return cls({}, context)

    @classmethod
    def one(cls, context: RectangleContext) -> CohomologyClass:
        return cls.sigma(YoungDiagram(), context)

    def as_dict(self) -> dict[YoungDiagram, int]:
        return dict(self.terms)

    def coefficient(self, lam) -> int:
        return self.as_dict().get(as_diagram(lam), 0)

    def is_homogeneous(self) -> bool:
        return len({lam.area for lam, _ in self.terms}) <= 1

    def __iter__(self) -> Iterator[tuple[YoungDiagram, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_same(self, other: CohomologyClass) -> None:
        if self.context != other.context:
            raise ContextMismatchError(f"cannot combine classes of {self.context} and {other.context}")

    def __add__(self, other: CohomologyClass) -> CohomologyClass:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        self._check_same(other)
        return CohomologyClass(list(self.terms) + list(other.terms), self.context)

    def __neg__(self) -> CohomologyClass:
        return CohomologyClass([(lam, -c) for lam, c in self.terms], self.context)

    def __sub__(self, other: CohomologyClass) -> CohomologyClass:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CohomologyClass):
            return cup(self, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return CohomologyClass([(lam, c * other) for lam, c in self.terms], self.context)
        return NotImplemented

    __rmul__ = __mul__

    # serialization

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (lam, c) in enumerate(self.terms):
            body = "[" + ",".join(map(str, lam.parts)) + "]"
            mag = abs(c)
            term = body if mag == 1 else f"{mag}*{body}"
            if i == 0:
                out.append(term if c > 0 else f"-{term}")
            else:
                out.append(f"{'+' if c > 0 else '-'} {term}")
        return " ".join(out)

    @classmethod
    def from_text(cls, text: str, context: RectangleContext) -> CohomologyClass:
        """Inverse of :meth:`to_text`; accepts ``3*[2,1] + 1*[1,1,1]`` style input."""
        s = text.strip()
        if s == "0":
            return cls.zero(context)
        terms = []
        pos = 0
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or m.end() == pos:
                raise ValidationError(f"cannot parse class {text!r} at offset {pos}")
            sign, coeff, body = m.groups()
            if terms and sign is None:
                raise ValidationError(f"missing '+' or '-' between terms in {text!r}")
            c = int(coeff) if coeff else 1
            terms.append((YoungDiagram.parse(body), -c if sign == "-" else c))
            pos = m.end()
        if not terms:
            raise ValidationError(f"empty class text {text!r}")
        return cls(terms, context)

    def to_json(self) -> dict:
        return {
            "terms": [{"diagram": list(lam.parts), "coeff": c} for lam, c in self.terms],
            "k": self.context.k,
            "n": self.context.n,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> CohomologyClass:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            ctx = RectangleContext(data["k"], data["n"])
            return cls([(YoungDiagram(t["diagram"]), t["coeff"]) for t in data["terms"]], ctx)
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed class JSON: {exc}") from None

    def __str__(self) -> str:
        return self.to_text()


@lru_cache(maxsize=None)
def _basis_product(lam: YoungDiagram, mu: YoungDiagram, ctx: RectangleContext) -> tuple[tuple[YoungDiagram, int], ...]:
    area = lam.area + mu.area
    if area > ctx.area:
        return ()
    out = []
    for nu in ctx.diagrams(area):
        if nu.contains(lam) and nu.contains(mu):
            c = _lr_count(lam, mu, nu)
            if c:
                out.append((nu, c))
    return tuple(out)


def basis_product(lam, mu, ctx: RectangleContext) -> CohomologyClass:
    """sigma_lam * sigma_mu in A*(k, n)."""
    lam, mu = as_diagram(lam), as_diagram(mu)
    ctx.require_fit(lam)
    ctx.require_fit(mu)
    return CohomologyClass(_basis_product(lam, mu, ctx), ctx)


def cup(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    """Bilinear cup product, truncated to the rectangle."""
    if a.context != b.context:
        raise ContextMismatchError(f"cannot multiply classes of {a.context} and {b.context}")
    ctx = a.context
    acc: dict[YoungDiagram, int] = {}
    for lam, x in a.terms:
        for mu, y in b.terms:
            for nu, c in _basis_product(lam, mu, ctx):
                acc[nu] = acc.get(nu, 0) + x * y * c
    return CohomologyClass(acc, ctx)


def cup_nonzero(lam, mu, ctx: RectangleContext) -> bool:
    return bool(basis_product(lam, mu, ctx))


def duality_coefficient(lam, mu, ctx: RectangleContext) -> int:
    """Coefficient of the full-rectangle class in sigma_lam * sigma_mu."""
    lam, mu = as_diagram(lam), as_diagram(mu)
    ctx.require_fit(lam)
    ctx.require_fit(mu)
    if lam.area + mu.area != ctx.area:
        return 0
    return lr_coefficient(lam, mu, ctx.full())
