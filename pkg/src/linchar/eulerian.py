"""Classical and generalized Eulerian polynomials, truncation, and a
small-rank Weyl-group oracle.

The production path for R_Phi is the product formula
R_Phi(x) = [c_0]_x [c_1]_x ... [c_l]_x * R_{A_l}(x), where [c]_x is the
x-analogue 1 + x + ... + x^(c-1).  The ascent-statistic definition over the
Weyl group is kept only as an independently derived oracle for rank <= 3.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InexactDivision, UnsupportedRank
from .ratpoly import RatPoly
from .rootdata import RootSystemId, lookup, positive_roots


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    """Eulerian numbers A(n, 0..n-1) via the additive recurrence."""
    if n == 1:
        return (1,)
    prev = _eulerian_row(n - 1)

    def a(k: int) -> int:
        return prev[k] if 0 <= k < len(prev) else 0

    return tuple((k + 1) * a(k) + (n - k) * a(k - 1) for k in range(n))


@lru_cache(maxsize=None)
def classical_eulerian(rank: int) -> RatPoly:
    """R_{A_l}(x) = x * A_l(x): lowest term x, degree l."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    return RatPoly((0,) + _eulerian_row(rank))


def q_analogue(c: int) -> RatPoly:
    """[c]_x = (x^c - 1)/(x - 1) = 1 + x + ... + x^(c-1)."""
    if c < 1:
        raise ValueError("c must be >= 1")
    return RatPoly((1,) * c)


@lru_cache(maxsize=None)
def generalized_eulerian(ident: RootSystemId) -> RatPoly:
    """R_Phi(x) by the cyclotomic product formula; degree h-1, integer coefficients."""
    data = lookup(ident)
    poly = classical_eulerian(data.rank)
    for c in data.marks:
        poly = poly * q_analogue(c)
    return poly


def truncate_half(R: RatPoly, h: int) -> RatPoly:
    """Lower half of an Eulerian polynomial of a system with Coxeter number h.

    Keeps the terms of index < h/2 and, when h is even, half of the middle
    x^(h/2) coefficient, so that R(x) = R'(x) + x^h R'(1/x).
    """
    if R.degree != h - 1:
        raise ValueError(f"degree mismatch: deg R = {R.degree}, expected h - 1 = {h - 1}")
    coeffs = list(R.coeffs[: (h + 1) // 2])  # indices < ceil(h/2), i.e. < h/2 for even h
    if h % 2 == 0:
        coeffs.append(R.coeff(h // 2) / 2)
    return RatPoly(coeffs)


def _weyl_elements(cartan, rank: int):
    """Enumerate W as tuples of images of the simple roots (BFS closure)."""
    identity = tuple(tuple(1 if i == j else 0 for i in range(rank)) for j in range(rank))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for j in range(rank):
                # w * s_j maps alpha_i to w(s_j(alpha_i)) = w(alpha_i) - A_ij w(alpha_j)
                img = tuple(
                    tuple(
                        w[i][k] - cartan[i][j] * w[j][k] for k in range(rank)
                    )
                    for i in range(rank)
                )
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def asc_oracle(ident: RootSystemId) -> RatPoly:
    """(1/f) * sum over W of x^asc(w), by explicit Weyl-group enumeration.

    asc(w) adds c_i over the i in {0..l} with w(alpha_i) positive, where
    alpha_0 = -highest root and c_0 = 1.  Rank <= 3 only; the marks used here
    are the highest-root coefficients in coordinate order.
    """
    if ident.rank > 3:
        raise UnsupportedRank(f"asc oracle capped at rank 3, got {ident}")
    forms = positive_roots(ident)
    data = lookup(ident)
    rank = ident.rank
    c_coord = (1,) + forms.highest
    counts: dict[int, int] = {}
    elements = _weyl_elements(forms.cartan, rank)
    for w in elements:
        alpha0_img = tuple(
            -sum(forms.highest[i] * w[i][k] for i in range(rank)) for k in range(rank)
        )
        images = (alpha0_img,) + tuple(w)
        asc = sum(
            c_coord[i]
            for i, img in enumerate(images)
            if any(x != 0 for x in img) and all(x >= 0 for x in img)
        )
        counts[asc] = counts.get(asc, 0) + 1
    if len(elements) != data.weyl_order:
        raise AssertionError(
            f"Weyl enumeration for {ident} found {len(elements)} elements, "
            f"expected {data.weyl_order}"
        )
    f = data.index_of_connection
    coeffs = [Fraction(0)] * (max(counts) + 1)
    for asc, cnt in counts.items():
        if cnt % f != 0:
            raise InexactDivision(
                f"ascent count {cnt} at exponent {asc} is not divisible by f = {f}"
            )
        coeffs[asc] = Fraction(cnt // f)
    return RatPoly(coeffs)
