"""Independent Littlewood-Richardson oracle via Schur polynomials.

s_lam * s_mu is expanded as a polynomial in N variables (enough that no
term is lost), then decomposed back into Schur polynomials by repeatedly
stripping the lexicographically largest monomial.  Nothing here touches
skew tableaux or lattice words.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache


@lru_cache(maxsize=None)
def schur(shape: tuple[int, ...], nvars: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of s_shape(x_1..x_nvars) by enumerating SSYT."""
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    poly: Counter = Counter()
    tab: dict[tuple[int, int], int] = {}

    def fill(i: int) -> None:
        if i == len(cells):
            exp = [0] * nvars
            for v in tab.values():
                exp[v] += 1
            poly[tuple(exp)] += 1
            return
        r, c = cells[i]
        lo = 0
        if c > 0:
            lo = tab[(r, c - 1)]
        if r > 0:
            lo = max(lo, tab[(r - 1, c)] + 1)
        for v in range(lo, nvars):
            tab[(r, c)] = v
            fill(i + 1)
        tab.pop((r, c), None)

    fill(0)
    return dict(poly)


def _mul(a: dict, b: dict) -> Counter:
    out: Counter = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def schur_product(lam: tuple[int, ...], mu: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """{nu: c^nu_{lam,mu}} with nu as a partition tuple without trailing zeros."""
    nvars = max(1, len(lam) + len(mu))
    poly = _mul(schur(lam, nvars), schur(mu, nvars))
    result: dict[tuple[int, ...], int] = {}
    while True:
        poly = Counter({e: c for e, c in poly.items() if c})
        if not poly:
            return result
        lead = max(poly)
        coeff = poly[lead]
        nu = tuple(p for p in lead if p)
        assert list(lead) == sorted(lead, reverse=True), "leading monomial must be a partition"
        result[nu] = coeff
        for e, c in schur(nu, nvars).items():
            poly[e] -= coeff * c
