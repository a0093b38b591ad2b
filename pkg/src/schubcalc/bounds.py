"""Dimension and codimension formulas for rank varieties and Grassmannian loci.

Covers the codimension of the rank variety R_k = {rank A <= k}, the
Grassmannian dimension, the lower bounds on the codimension of sets that
avoid a special Schubert variety (in G_k(C^n)) or a fixed subspace E (in the
matrix space), and the function f(k) whose minimum over the rank strata
yields the matrix-space bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .young import RectangleContext, YoungDiagram, overlap_test

__all__ = [
    "MatrixSpaceShape",
    "BoundReport",
    "grassmannian_dim",
    "rank_variety_codim",
    "rank_stratum_dim",
    "schubert_bound",
    "main_bound",
    "reduction_f",
    "reduction_sweep",
    "special_schubert_diagram",
    "minimal_dual_diagram",
    "least_overlapping_area",
]


@dataclass(frozen=True)
class MatrixSpaceShape:
    """Mat_{n x m}: n rows, m columns."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValidationError(f"matrix shape needs n, m >= 1, got n={self.n}, m={self.m}")

    @property
    def dim(self) -> int:
        return self.n * self.m


@dataclass(frozen=True)
class BoundReport:
    """A lower bound on a codimension.

    ``vacuous`` is set when the bound carries no information: the value is
    <= 0, or the hypothesis can never hold (e = 0 for the matrix bound).
    """

    formula_name: str
    expression: str
    value: int
    inputs: dict = field(default_factory=dict)
    vacuous: bool = False

    def to_json(self) -> dict:
        return {
            "formula": self.formula_name,
            "expression": self.expression,
            "value": self.value,
            "vacuous": self.vacuous,
            "inputs": dict(self.inputs),
        }

    def __str__(self) -> str:
        return f"{self.expression} = {self.value}" + (" (vacuous)" if self.vacuous else "")


def grassmannian_dim(ctx: RectangleContext) -> int:
    return ctx.k * (ctx.n - ctx.k)


def rank_variety_codim(shape: MatrixSpaceShape, k: int) -> int:
    """Codimension (m-k)(n-k) of {rank <= k} in Mat_{n x m}."""
    if not 0 <= k <= min(shape.m, shape.n):
        raise ValidationError(f"rank k={k} outside [0, min(m, n)] = [0, {min(shape.m, shape.n)}]")
    return (shape.m - k) * (shape.n - k)


def rank_stratum_dim(shape: MatrixSpaceShape, k: int) -> int:
    """Dimension of the matrices of rank exactly k (equal to that of R_k)."""
    return shape.dim - rank_variety_codim(shape, k)


def _check_e(e: int, ctx: RectangleContext) -> None:
    if not 1 <= e <= ctx.k:
        raise ValidationError(f"need 1 <= e <= k, got e={e}, k={ctx.k}")


def schubert_bound(e: int, ctx: RectangleContext) -> BoundReport:
    """Codimension bound k + 1 - e for closed Y in G_k(C^n) missing S_k(E), dim E = e."""
    _check_e(e, ctx)
    value = ctx.k + 1 - e
    return BoundReport("schubert", "k+1-e", value, {"e": e, "k": ctx.k, "n": ctx.n}, vacuous=value <= 0)


def main_bound(shape: MatrixSpaceShape, e: int) -> BoundReport:
    """Codimension bound m + 1 - e for a closed column-invariant X whose closure misses E."""
    if not 0 <= e <= shape.n:
        raise ValidationError(f"need 0 <= e <= n, got e={e}, n={shape.n}")
    value = shape.m + 1 - e
    return BoundReport(
        "main", "m+1-e", value, {"n": shape.n, "m": shape.m, "e": e}, vacuous=(e == 0 or value <= 0)
    )


def reduction_f(k: int, shape: MatrixSpaceShape, e: int) -> int:
    """f(k) = (m-k)(n-k) + k + 1 - e, the bound on the rank-k stratum."""
    top = min(shape.m, shape.n - 1)
    if not 0 <= k <= top:
        raise ValidationError(f"k={k} outside [0, min(m, n-1)] = [0, {top}]")
    return (shape.m - k) * (shape.n - k) + k + 1 - e


def reduction_sweep(shape: MatrixSpaceShape, e: int) -> list[tuple[int, int]]:
    """(k, f(k)) for every admissible k."""
    return [(k, reduction_f(k, shape, e)) for k in range(min(shape.m, shape.n - 1) + 1)]


def special_schubert_diagram(e: int, ctx: RectangleContext) -> YoungDiagram:
    """((n-k)^e, 0^(k-e)), the diagram of S_k(E)."""
    _check_e(e, ctx)
    return YoungDiagram((ctx.width,) * e)


def minimal_dual_diagram(e: int, ctx: RectangleContext) -> YoungDiagram:
    """(1^(k-e+1)): the smallest diagram that overlaps the special diagram."""
    _check_e(e, ctx)
    return YoungDiagram((1,) * (ctx.k - e + 1))


def least_overlapping_area(e: int, ctx: RectangleContext) -> tuple[int, list[YoungDiagram]]:
    """Exhaustive search: minimum area of mu whose product with the special class vanishes.

    Returns the area and every diagram attaining it.
    """
    lam = special_schubert_diagram(e, ctx)
    hits = [mu for mu in ctx.diagrams() if not overlap_test(lam, mu, ctx)]
    best = min(mu.area for mu in hits)
    return best, sorted(mu for mu in hits if mu.area == best)
