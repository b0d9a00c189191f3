"""Exact univariate polynomials over Q, the shift-operator calculus, and
exact real-root counting (Sturm sequences, Routh-Hurwitz).

Coefficients are `fractions.Fraction` throughout and every operation in this
module is exact; floating point never enters here.  Polynomials are dense,
stored ascending (``coeffs[j]`` multiplies ``t**j``), normalized so the top
coefficient is nonzero; the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

#: Endpoint sentinels accepted by `sturm_real_root_count`.
NEG_INF = -math.inf
POS_INF = math.inf


def _frac(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact scalar expected (int or Fraction), got {type(x).__name__}")


def _normalize(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    cs = [_frac(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def coeffs_to_json(coeffs: Sequence[Fraction]) -> dict:
    """Canonical JSON form: {"coeffs": [["num","den"], ...]}, ascending."""
    return {"coeffs": [[str(c.numerator), str(c.denominator)] for c in coeffs]}


def coeffs_from_json(obj: dict) -> tuple[Fraction, ...]:
    return _normalize(Fraction(int(n), int(d)) for n, d in obj["coeffs"])


def _format_terms(coeffs: Sequence[Fraction], var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = coeffs[j]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if j == 0:
            body = str(mag)
        else:
            pw = var if j == 1 else f"{var}^{j}"
            body = pw if mag == 1 else f"{mag}*{pw}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


class RatPoly:
    """Dense polynomial over Q in one variable (conventionally t)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls()

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "RatPoly":
        return cls([0] * exponent + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], leading: Scalar = 1) -> "RatPoly":
        p = cls((leading,))
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    @classmethod
    def from_json(cls, obj: dict) -> "RatPoly":
        return cls(coeffs_from_json(obj))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("RatPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coeffs)!r})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            other = RatPoly((other,))
        if not isinstance(other, RatPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self.coeff(j) + other.coeff(j) for j in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "RatPoly":
        return self + (-other if isinstance(other, RatPoly) else RatPoly((-_frac(other),)))

    def __rsub__(self, other) -> "RatPoly":
        return (-self) + other

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    def __rmul__(self, other) -> "RatPoly":
        return self.scale(other)

    def scale(self, s: Scalar) -> "RatPoly":
        s = _frac(s)
        return RatPoly(c * s for c in self.coeffs)

    def __pow__(self, k: int) -> "RatPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = RatPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, x):
        """Horner evaluation; exact for Fraction/int x, numeric otherwise."""
        acc = 0 if not isinstance(x, complex) else 0j
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else float(c))
        return acc

    __call__ = evaluate

    def compose_affine(self, a: Scalar, b: Scalar) -> "RatPoly":
        """Exact substitution t -> a*t + b."""
        a, b = _frac(a), _frac(b)
        acc = RatPoly()
        for c in reversed(self.coeffs):
            if acc.is_zero:
                acc = RatPoly((c,))
                continue
            shifted = [Fraction(0)] * (len(acc.coeffs) + 1)
            for i, ci in enumerate(acc.coeffs):
                shifted[i + 1] += a * ci
                shifted[i] += b * ci
            shifted[0] += c
            acc = RatPoly(shifted)
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly(j * self.coeffs[j] for j in range(1, len(self.coeffs)))

    # -- division, gcd, square-free structure --------------------------------

    def divrem(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        d, lead = other.degree, other.leading
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            factor = rem[-1] / lead
            q[k] = factor
            for j, c in enumerate(other.coeffs):
                rem[k + j] -= factor * c
            rem.pop()
        return RatPoly(q), RatPoly(rem)

    def __divmod__(self, other):
        return self.divrem(other)

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        q, r = self.divrem(other)
        if not r.is_zero:
            raise ArithmeticError("division was not exact")
        return q

    def monic(self) -> "RatPoly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(Fraction(1) / self.leading)

    def gcd(self, other: "RatPoly") -> "RatPoly":
        """Monic gcd over Q."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.divrem(b)[1]
        return RatPoly.one() if a.is_zero else a.monic()

    def squarefree_part(self) -> "RatPoly":
        """Monic product of the distinct irreducible factors."""
        if self.is_zero:
            raise ValueError("zero polynomial")
        if self.degree == 0:
            return RatPoly.one()
        return self.exact_div(self.gcd(self.derivative())).monic()

    def squarefree_factors(self) -> list[tuple["RatPoly", int]]:
        """Yun decomposition: [(f_1, 1), (f_2, 2), ...] with
        self = leading * prod f_i**i, each f_i monic square-free, deg f_i > 0."""
        if self.is_zero:
            raise ValueError("zero polynomial")
        p = self.monic()
        if p.degree == 0:
            return []
        g = p.gcd(p.derivative())
        b = p.exact_div(g)
        c = p.derivative().exact_div(g)
        d = c - b.derivative()
        factors: list[tuple[RatPoly, int]] = []
        i = 1
        while b.degree > 0:
            a = b.gcd(d)
            if a.degree > 0:
                factors.append((a, i))
            b = b.exact_div(a)
            c = d.exact_div(a)
            d = c - b.derivative()
            i += 1
        return factors

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return coeffs_to_json(self.coeffs)

    def pretty(self, var: str = "t") -> str:
        return _format_terms(self.coeffs, var)


class ShiftPoly:
    """Polynomial in the shift operator S; ``coeffs[i]`` multiplies S**i.

    S acts on polynomials by (S g)(t) = g(t - 1); `apply_shift` applies a
    whole operator polynomial with an integer step multiplier.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ShiftPoly is immutable")

    @classmethod
    def from_poly(cls, p: RatPoly) -> "ShiftPoly":
        return cls(p.coeffs)

    @classmethod
    def from_json(cls, obj: dict) -> "ShiftPoly":
        return cls(coeffs_from_json(obj))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, ShiftPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("ShiftPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"ShiftPoly({list(self.coeffs)!r})"

    def __add__(self, other: "ShiftPoly") -> "ShiftPoly":
        if not isinstance(other, ShiftPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))

        def coeff(p, j):
            return p.coeffs[j] if j < len(p.coeffs) else Fraction(0)

        return ShiftPoly(coeff(self, j) + coeff(other, j) for j in range(n))

    def inflate(self, k: int) -> "ShiftPoly":
        """Return f(S**k) as an operator polynomial."""
        if k < 1:
            raise ValueError("step must be >= 1")
        out = [Fraction(0)] * (k * self.degree + 1 if self.coeffs else 0)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return ShiftPoly(out)

    def to_json(self) -> dict:
        return coeffs_to_json(self.coeffs)

    def pretty(self, var: str = "S") -> str:
        return _format_terms(self.coeffs, var)


# -- shift-operator action ----------------------------------------------------


def apply_shift(f: ShiftPoly, step: int, g: RatPoly) -> RatPoly:
    """Apply f(S**step) to g: sum_i f_i * g(t - step*i), exactly."""
    if step < 1:
        raise ValueError("step must be >= 1")
    acc = RatPoly()
    for i, fi in enumerate(f.coeffs):
        if fi != 0:
            acc = acc + g.compose_affine(1, -step * i).scale(fi)
    return acc


def reflect(g: RatPoly, M: Scalar) -> RatPoly:
    """Return g(M - t), exactly."""
    return g.compose_affine(-1, M)


# -- Sturm sequences -----------------------------------------------------------


def _sturm_chain(p: RatPoly) -> list[RatPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        rem = chain[-2].divrem(chain[-1])[1]
        if rem.is_zero:
            break
        chain.append(-rem)
    return [q for q in chain if not q.is_zero]

def _endpoint(x):
    """Validate a Sturm interval endpoint: exact rational or +-inf."""
    if isinstance(x, (int, Fraction)):
        return _frac(x)
    if isinstance(x, float) and math.isinf(x):
        return x
    raise TypeError("interval endpoint must be a Fraction, int, or +-math.inf")


def _sign_at(q: RatPoly, x) -> int:
    if x == POS_INF:
        v = q.leading
    elif x == NEG_INF:
        v = q.leading * (-1) ** q.degree
    else:
        v = q.evaluate(x)
    return (v > 0) - (v < 0)


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sturm_real_root_count(p: RatPoly, a, b) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    Endpoints may be Fractions/ints or +-math.inf.  Works on the square-free
    part, so multiplicities never inflate the count.
    """
    if p.is_zero:
        raise ValueError("root counting on the zero polynomial")
    a, b = _endpoint(a), _endpoint(b)
    if not a < b:
        return 0
    ps = p.squarefree_part()
    if ps.degree == 0:
        return 0
    chain = _sturm_chain(ps)
    va = _variations([_sign_at(q, a) for q in chain])
    vb = _variations([_sign_at(q, b) for q in chain])
    return va - vb


def all_roots_real_nonpositive(p: RatPoly) -> bool:
    """True iff every complex root of p is real and <= 0 (with multiplicity).

    Square-free factorization first; each factor must have as many distinct
    real roots in (-inf, 0] as its degree.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    for factor, _mult in p.squarefree_factors():
        if sturm_real_root_count(factor, NEG_INF, 0) != factor.degree:
            return False
    return True


# -- Routh-Hurwitz --------------------------------------------------------------


def routh_hurwitz_all_roots_left(p: RatPoly) -> Union[bool, None]:
    """Exact Routh test: True iff all roots of p satisfy Re < 0.

    Returns None (inconclusive) on a zero pivot or zero row in the Routh
    array, rather than perturbing; callers fall back to numerics.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    n = p.degree
    if n == 0:
        return True
    desc = list(reversed(p.coeffs))
    if desc[0] < 0:
        desc = [-c for c in desc]
    # A strictly negative coefficient certifies a root with Re >= 0.
    if any(c < 0 for c in desc):
        return False
    row_prev = desc[0::2]
    row_curr = desc[1::2]

    def at(row, j):
        return row[j] if j < len(row) else Fraction(0)

    first_col = [row_prev[0]]
    for _ in range(n):
        if all(c == 0 for c in row_curr):
            return None
        pivot = row_curr[0]
        if pivot == 0:
            return None
        first_col.append(pivot)
        width = max(len(row_prev) - 1, len(row_curr) - 1, 0)
        nxt = [
            (pivot * at(row_prev, j + 1) - row_prev[0] * at(row_curr, j + 1)) / pivot
            for j in range(width)
        ]
        row_prev, row_curr = row_curr, nxt
        if not row_curr:
            break
    return all(c > 0 for c in first_col)
