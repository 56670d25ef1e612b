"""Exact counting sequences, polynomial families, and series identities.

All arithmetic is exact: integers, ``fractions.Fraction``, and sparse
integer polynomials in x and y.  The central sequence c_n counts
indecomposable permutations of S_n (1, 1, 3, 13, 71, 461, 3447, ...).
Refinements by cycle count c_{n,k} live next to the unsigned Stirling
numbers of the first kind, with generating polynomials

    A_n(x) = x(x+1)...(x+n-1)        (all of S_n by cycles)
    C_n(x) = sum_k c_{n,k} x^k       (indecomposables by cycles)

and the two families over labeled Dyck paths

    L_n(x,y), L'_n(x,y)   all/primitive paths of length 2n, x marking
                          peak steps (cycles) and y+height the rest
                          (left-to-right maxima on the primitive side)
    M_m(y),  M'_m(y)      all/primitive paths arising from loopless
                          pairings, y+height on every down step
                          (rooted maps with m edges by vertices).

Every scalar table is produced by two independent recurrences that are
cross-checked on each computation (InternalMismatch on disagreement);
the path families are additionally cross-checked against direct
summation over all Dyck paths while the Catalan number stays at desk
scale (n <= 10).  Caches are append-only module-level tables guarded by
functools.lru_cache; safe to read concurrently once written.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import InternalMismatch
from .dyck import enum_dyck_paths, is_primitive, validate_dyck
from .errors import InvalidPath

__all__ = [
    "BivariatePoly",
    "SeriesInZ",
    "factorial",
    "double_factorial_odd",
    "stirling_poly",
    "stirling_number",
    "c_count",
    "c_count_by_cycles",
    "c_poly",
    "i_count",
    "L_of_path",
    "L_family",
    "M_of_path",
    "M_family",
    "joint_perm_poly",
    "transitive_probability",
    "arques_beraud_check",
]


class BivariatePoly:
    """Sparse polynomial in x and y with exact integer coefficients.

    Immutable; monomials are held as {(x_degree, y_degree): coeff} with
    zeros dropped.  Text form sorts monomials by descending (x, y)
    degree and writes explicit ``*`` and ``^``: ``x^2*y + 3*x*y^2``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict | Iterable | None = None) -> None:
        acc: dict[tuple[int, int], int] = {}
        items = coeffs.items() if isinstance(coeffs, dict) else (coeffs or ())
        for (px, py), v in items:
            px, py, v = int(px), int(py), int(v)
            if px < 0 or py < 0:
                raise ValueError("negative exponent")
            if v:
                acc[(px, py)] = acc.get((px, py), 0) + v
        object.__setattr__(self, "_c", {k: v for k, v in acc.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BivariatePoly":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "BivariatePoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, px: int, py: int, c: int = 1) -> "BivariatePoly":
        return cls({(px, py): c})

    @classmethod
    def x(cls) -> "BivariatePoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePoly":
        return cls({(0, 1): 1})

    # -- inspection --------------------------------------------------------

    def terms(self) -> tuple[tuple[int, int, int], ...]:
        """(x_degree, y_degree, coeff) triples, descending by degree."""
        return tuple(
            (px, py, self._c[(px, py)])
            for px, py in sorted(self._c, reverse=True)
        )

    def coefficient(self, px: int, py: int) -> int:
        return self._c.get((px, py), 0)

    @property
    def is_zero(self) -> bool:
        return not self._c

    def degree_x(self) -> int:
        return max((px for px, _ in self._c), default=0)

    def degree_y(self) -> int:
        return max((py for _, py in self._c), default=0)

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BivariatePoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return BivariatePoly(out)

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        return self + (-other)

    def __mul__(self, other) -> "BivariatePoly":
        if isinstance(other, int):
            return BivariatePoly({k: v * other for k, v in self._c.items()})
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), v1 in self._c.items():
            for (p2, q2), v2 in other._c.items():
                k = (p1 + p2, q1 + q2)
                out[k] = out.get(k, 0) + v1 * v2
        return BivariatePoly(out)

    __rmul__ = __mul__

    def evaluate(self, x, y):
        """Exact value at (x, y); accepts int or Fraction arguments."""
        return sum((v * x**px * y**py for (px, py), v in self._c.items()), 0)

    def subs_y_plus(self, k: int) -> "BivariatePoly":
        """Substitute y -> y + k, exactly."""
        out: dict[tuple[int, int], int] = {}
        for (px, py), v in self._c.items():
            for j in range(py + 1):
                key = (px, j)
                out[key] = out.get(key, 0) + v * math.comb(py, j) * k ** (py - j)
        return BivariatePoly(out)

    def swap_xy(self) -> "BivariatePoly":
        return BivariatePoly({(py, px): v for (px, py), v in self._c.items()})

    # -- text and JSON ---------------------------------------------------------

    def to_string(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for px, py, v in self.terms():
            factors = []
            if px == 1:
                factors.append("x")
            elif px > 1:
                factors.append(f"x^{px}")
            if py == 1:
                factors.append("y")
            elif py > 1:
                factors.append(f"y^{py}")
            mag = abs(v)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            term = "*".join(factors)
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if v > 0 else f"- {term}")
        return " ".join(parts)

    __str__ = to_string

    def __repr__(self) -> str:
        return f"BivariatePoly({self.to_string()})"

    def to_json_obj(self) -> list[dict]:
        return [{"x": px, "y": py, "c": str(v)} for px, py, v in self.terms()]

    @classmethod
    def from_json_obj(cls, obj: Sequence[dict]) -> "BivariatePoly":
        return cls({(int(t["x"]), int(t["y"])): int(t["c"]) for t in obj})


class SeriesInZ:
    """Power series in z, truncated at a fixed order, with BivariatePoly
    coefficients.  Products truncate; all arithmetic stays exact."""

    __slots__ = ("order", "_coeffs")

    def __init__(self, coeffs: Sequence[BivariatePoly], order: int) -> None:
        if order < 0:
            raise ValueError("order must be >= 0")
        padded = list(coeffs[: order + 1])
        padded.extend(BivariatePoly.zero() for _ in range(order + 1 - len(padded)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_coeffs", tuple(padded))

    def __setattr__(self, name, value):
        raise AttributeError("SeriesInZ is immutable")

    @classmethod
    def zero(cls, order: int) -> "SeriesInZ":
        return cls([], order)

    @classmethod
    def constant(cls, poly: BivariatePoly, order: int) -> "SeriesInZ":
        return cls([poly], order)

    def coefficient(self, m: int) -> BivariatePoly:
        return self._coeffs[m]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SeriesInZ)
            and self.order == other.order
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self._coeffs))

    def __add__(self, other: "SeriesInZ") -> "SeriesInZ":
        self._check(other)
        return SeriesInZ(
            [a + b for a, b in zip(self._coeffs, other._coeffs)], self.order
        )

    def __sub__(self, other: "SeriesInZ") -> "SeriesInZ":
        self._check(other)
        return SeriesInZ(
            [a - b for a, b in zip(self._coeffs, other._coeffs)], self.order
        )

    def __mul__(self, other: "SeriesInZ") -> "SeriesInZ":
        self._check(other)
        out = [BivariatePoly.zero() for _ in range(self.order + 1)]
        for i, a in enumerate(self._coeffs):
            if a.is_zero:
                continue
            for j in range(self.order + 1 - i):
                b = other._coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return SeriesInZ(out, self.order)

    def shift_z(self, k: int) -> "SeriesInZ":
        """Multiply by z^k, truncating at the fixed order."""
        return SeriesInZ([BivariatePoly.zero()] * k + list(self._coeffs), self.order)

    def map_coeffs(self, f: Callable[[BivariatePoly], BivariatePoly]) -> "SeriesInZ":
        return SeriesInZ([f(c) for c in self._coeffs], self.order)

    def inverse_one_minus(self) -> "SeriesInZ":
        """1 / (1 - V) for a series V with zero constant term."""
        if not self._coeffs[0].is_zero:
            raise ValueError("need zero constant term")
        one = BivariatePoly.constant(1)
        out = [one]
        for m in range(1, self.order + 1):
            acc = BivariatePoly.zero()
            for p in range(1, m + 1):
                if not self._coeffs[p].is_zero:
                    acc = acc + self._coeffs[p] * out[m - p]
            out.append(acc)
        return SeriesInZ(out, self.order)

    def _check(self, other: "SeriesInZ") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")


# --- scalar sequences -----------------------------------------------------------


def factorial(n: int) -> int:
    """n!, delegated to the standard library."""
    return math.factorial(n)


def double_factorial_odd(m: int) -> int:
    """(2m-1)!! = 1*3*5*...*(2m-1); the count of pairings of 2m points."""
    if m < 0:
        raise ValueError("need m >= 0")
    return math.factorial(2 * m) // (math.factorial(m) << m)


@lru_cache(maxsize=None)
def stirling_poly(n: int) -> BivariatePoly:
    """A_n(x) = x(x+1)...(x+n-1); coefficients are the unsigned Stirling
    numbers of the first kind (permutations of S_n by cycle count)."""
    if n < 0:
        raise ValueError("need n >= 0")
    if n == 0:
        return BivariatePoly.constant(1)
    prev = stirling_poly(n - 1)
    return prev * (BivariatePoly.x() + BivariatePoly.constant(n - 1))


def stirling_number(n: int, k: int) -> int:
    """Permutations of S_n with exactly k cycles (s_{0,0} = 1)."""
    if n < 0 or k < 0:
        raise ValueError("need n, k >= 0")
    return stirling_poly(n).coefficient(k, 0)


@lru_cache(maxsize=None)
def _c_table(n: int) -> tuple[int, ...]:
    # two recurrences, checked against each other at every size:
    #   c_m = m! - sum_{p<m} c_p (m-p)!
    #   c_m = sum_{p<m} p c_p (m-1-p)!   (m >= 2)
    vals: list[int] = []
    for m in range(1, n + 1):
        by_subtraction = math.factorial(m) - sum(
            vals[p - 1] * math.factorial(m - p) for p in range(1, m)
        )
        if m == 1:
            by_weighting = 1
        else:
            by_weighting = sum(
                p * vals[p - 1] * math.factorial(m - 1 - p) for p in range(1, m)
            )
        if by_subtraction != by_weighting:
            raise InternalMismatch(
                f"c_{m}: {by_subtraction} != {by_weighting}"
            )
        vals.append(by_subtraction)
    return tuple(vals)


def c_count(n: int) -> int:
    """Indecomposable permutations of S_n: 1, 1, 3, 13, 71, 461, 3447, ..."""
    if n < 1:
        raise ValueError("need n >= 1")
    return _c_table(n)[-1]


@lru_cache(maxsize=None)
def _c_rows(n: int) -> tuple[dict[int, int], ...]:
    # row m maps k -> c_{m,k}; seeded with c_{1,1} = 1; each entry is
    # produced by the inclusion-exclusion formula and cross-checked by
    # the first-point-of-last-block formula
    rows: list[dict[int, int]] = [{1: 1}]
    for m in range(2, n + 1):
        row: dict[int, int] = {}
        for k in range(1, m):
            minus = stirling_number(m, k)
            for p in range(1, m):
                for i in range(1, min(k, p) + 1):
                    cpi = rows[p - 1].get(i, 0)
                    if cpi:
                        minus -= cpi * stirling_number(m - p, k - i)
            weighted = 0
            for p in range(1, m):
                for i in range(1, min(k, p) + 1):
                    cpi = rows[p - 1].get(i, 0)
                    if cpi:
                        weighted += p * cpi * stirling_number(m - 1 - p, k - i)
            if minus != weighted:
                raise InternalMismatch(f"c_{{{m},{k}}}: {minus} != {weighted}")
            if minus:
                row[k] = minus
        rows.append(row)
    return tuple(rows)


def c_count_by_cycles(n: int, k: int) -> int:
    """Indecomposable permutations of S_n with exactly k cycles."""
    if n < 2:
        raise ValueError("need n >= 2 (S_1 has the single 1-cycle permutation)")
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= {n - 1}, got {k}")
    return _c_rows(n)[n - 1].get(k, 0)


@lru_cache(maxsize=None)
def c_poly(n: int) -> BivariatePoly:
    """C_n(x) = sum_k c_{n,k} x^k, computed by both companion recurrences

        C_n = A_n - sum_{p<n} A_{n-p} C_p
        C_n = sum_{p<n} p A_{n-1-p} C_p     (n >= 2)

    and checked against the scalar triangle."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return BivariatePoly.x()
    by_subtraction = stirling_poly(n)
    by_weighting = BivariatePoly.zero()
    for p in range(1, n):
        cp = c_poly(p)
        by_subtraction = by_subtraction - stirling_poly(n - p) * cp
        by_weighting = by_weighting + p * (stirling_poly(n - 1 - p) * cp)
    if by_subtraction != by_weighting:
        raise InternalMismatch(f"C_{n} recurrences disagree")
    row = _c_rows(n)[n - 1]
    triangle = BivariatePoly({(k, 0): v for k, v in row.items()})
    if by_subtraction != triangle:
        raise InternalMismatch(f"C_{n} does not match the scalar triangle")
    return by_subtraction


@lru_cache(maxsize=None)
def _i_table(m: int) -> tuple[int, ...]:
    # i_m = (2m-1)!! - sum_{p<m} i_p (2m-2p-1)!!
    vals: list[int] = []
    for t in range(1, m + 1):
        v = double_factorial_odd(t) - sum(
            vals[p - 1] * double_factorial_odd(t - p) for p in range(1, t)
        )
        vals.append(v)
    return tuple(vals)


def i_count(m: int) -> int:
    """Indecomposable fixed-point-free involutions of S_{2m}: 1, 2, 10, 74, ..."""
    if m < 1:
        raise ValueError("need m >= 1")
    return _i_table(m)[-1]


# --- path polynomials -------------------------------------------------------------

_PATH_SUM_LIMIT = 10


def L_of_path(word: str) -> BivariatePoly:
    """Product over the b steps of a Dyck word: x when the step follows
    an a, otherwise y + height-in-front; the labeling-count generating
    monomial weight of the path."""
    if not validate_dyck(word):
        raise InvalidPath(f"not a Dyck word: {word!r}")
    out = BivariatePoly.constant(1)
    height = 0
    prev = ""
    for ch in word:
        if ch == "a":
            height += 1
        else:
            height -= 1
            if prev == "a":
                out = out * BivariatePoly.x()
            else:
                out = out * (BivariatePoly.y() + BivariatePoly.constant(height))
        prev = ch
    return out


def M_of_path(word: str) -> BivariatePoly:
    """Product over the b steps of y + height-in-front, with no special
    peak case; the map-labeling weight of the path."""
    if not validate_dyck(word):
        raise InvalidPath(f"not a Dyck word: {word!r}")
    out = BivariatePoly.constant(1)
    height = 0
    for ch in word:
        if ch == "a":
            height += 1
        else:
            height -= 1
            out = out * (BivariatePoly.y() + BivariatePoly.constant(height))
    return out


@lru_cache(maxsize=None)
def L_family(n: int) -> tuple[BivariatePoly, BivariatePoly]:
    """(L_n, L'_n): the path polynomials over all / primitive Dyck words
    of length 2n, built by the coupled recurrences

        L'_n = y * L_{n-1}(x, y+1),   L'_1 = L_1 = x
        L_n  = L'_n + sum_{p<n} L'_p L_{n-p}

    and cross-checked against direct summation while n <= 10.
    L'_n(x, 1) = C_n(x); L_n(1, 1) = n!; L'_n is x/y-symmetric for n >= 2."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        x = BivariatePoly.x()
        L, Lp = x, x
    else:
        prev_L = L_family(n - 1)[0]
        Lp = BivariatePoly.y() * prev_L.subs_y_plus(1)
        L = Lp
        for p in range(1, n):
            L = L + L_family(p)[1] * L_family(n - p)[0]
    if n <= _PATH_SUM_LIMIT:
        total = BivariatePoly.zero()
        prim = BivariatePoly.zero()
        for word in enum_dyck_paths(n):
            w = L_of_path(word)
            total = total + w
            if is_primitive(word):
                prim = prim + w
        if total != L or prim != Lp:
            raise InternalMismatch(f"L-family recurrence vs path sum at n={n}")
    return L, Lp


@lru_cache(maxsize=None)
def M_family(m: int) -> tuple[BivariatePoly, BivariatePoly]:
    """(M_m, M'_m): the map polynomials over all / primitive Dyck words
    of length 2m, built by

        M'_m = y * M_{m-1}(y+1),   M'_1 = M_1 = y
        M_m  = M'_m + sum_{p<m} M'_p M_{m-p}

    and cross-checked against direct summation while m <= 10.
    M_m(1) = (2m-1)!!; M'_m(1) = i_m."""
    if m < 1:
        raise ValueError("need m >= 1")
    if m == 1:
        y = BivariatePoly.y()
        M, Mp = y, y
    else:
        prev_M = M_family(m - 1)[0]
        Mp = BivariatePoly.y() * prev_M.subs_y_plus(1)
        M = Mp
        for p in range(1, m):
            M = M + M_family(p)[1] * M_family(m - p)[0]
    if m <= _PATH_SUM_LIMIT:
        total = BivariatePoly.zero()
        prim = BivariatePoly.zero()
        for word in enum_dyck_paths(m):
            w = M_of_path(word)
            total = total + w
            if is_primitive(word):
                prim = prim + w
        if total != M or prim != Mp:
            raise InternalMismatch(f"M-family recurrence vs path sum at m={m}")
    return M, Mp


@lru_cache(maxsize=None)
def joint_perm_poly(n: int) -> BivariatePoly:
    """Joint distribution of S_n by (cycles -> x, left-to-right maxima -> y).

    Composed from indecomposable blocks: a 1-point block weighs x*y (one
    cycle, one maximum) and a p-point block, p >= 2, weighs L'_p; the
    z^n coefficient of 1/(1 - sum_p block_p z^p) is the answer.  The
    result is symmetric in x and y.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    coeffs = [BivariatePoly.zero(), BivariatePoly.monomial(1, 1)]
    for p in range(2, n + 1):
        coeffs.append(L_family(p)[1])
    blocks = SeriesInZ(coeffs, n)
    return blocks.inverse_one_minus().coefficient(n)


def transitive_probability(n: int) -> Fraction:
    """Probability that a uniform pair of permutations of S_n acts
    transitively: c_{n+1} / (n * n!), exactly."""
    if n < 1:
        raise ValueError("need n >= 1")
    return Fraction(c_count(n + 1), n * math.factorial(n))


def arques_beraud_check(order: int) -> SeriesInZ:
    """Residual of the rooted-map functional equation, exact through
    z^order.

    U(z, y) = sum_m z^m M'_{m+1}(y) counts rooted maps with m edges by
    vertices; the returned series is U - y - z*U(z,y)*U(z,y+1), which is
    identically zero when the M' family is consistent.
    """
    if order < 0:
        raise ValueError("need order >= 0")
    U = SeriesInZ([M_family(m + 1)[1] for m in range(order + 1)], order)
    shifted = U.map_coeffs(lambda P: P.subs_y_plus(1))
    residual = U - SeriesInZ.constant(BivariatePoly.y(), order) - (U * shifted).shift_z(1)
    return residual
