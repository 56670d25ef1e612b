"""Permutations of {1..n} and the statistics the rest of the package lives on.

Everything is 1-indexed: a permutation ``p`` sends ``i`` to ``p(i)``,
which is ``p.images[i - 1]``.  Two text forms are supported: one-line
notation ``"3,1,2,5,4"`` and cycle notation ``"(1,4)(2,7,5,3)(6)(8,9)"``
(fixed points are never omitted, so the size is always the largest
element).

The canonical cycle form writes each cycle starting with its maximum and
orders cycles by increasing first element.  Flattening that form is the
first fundamental transform, a bijection of S_n that exchanges the
number of cycles with the number of left-to-right maxima.

A permutation is indecomposable (connected) when no proper prefix
{1..p}, p < n, is stable, i.e. ``max(a_1..a_p) > p`` for every p < n.
Every permutation factors uniquely into a concatenation of
indecomposable blocks; ``blocks``/``concat_blocks`` realize the two
directions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInput, NotABijection, ParseError, SizeMismatch

__all__ = [
    "Permutation",
    "CycleForm",
    "identity",
    "parse_permutation",
    "format_permutation",
    "format_cycles",
    "compose",
    "inverse",
    "cycles",
    "from_cycles",
    "lr_maxima",
    "rl_minima",
    "is_indecomposable",
    "blocks",
    "concat_blocks",
    "fundamental_transform",
    "fundamental_transform_inverse",
    "conjugate",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as its tuple of images.

    >>> p = Permutation((3, 1, 2))
    >>> p(1), p(3), p.n
    (3, 2, 3)
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise NotABijection("a permutation needs at least one element")
        if sorted(images) != list(range(1, n + 1)):
            raise NotABijection(f"not a bijection of 1..{n}: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __repr__(self) -> str:
        return f"Permutation({','.join(map(str, self.images))})"


@dataclass(frozen=True)
class CycleForm:
    """Disjoint cycles partitioning {1..n}.

    ``canonical`` distinguishes the two conventions in use: canonical
    form starts every cycle at its maximum and sorts cycles by first
    element; orbit form starts every cycle at its minimum and sorts
    cycles by minimum.
    """

    cycles: tuple[tuple[int, ...], ...]
    canonical: bool

    def __str__(self) -> str:
        return format_cycles(self)


def identity(n: int) -> Permutation:
    """The identity permutation on {1..n}."""
    if n < 1:
        raise NotABijection("a permutation needs at least one element")
    return Permutation(tuple(range(1, n + 1)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Composition a after b: the result sends i to a(b(i)).

    >>> compose(Permutation((2, 3, 1)), Permutation((2, 1, 3)))
    Permutation(3,2,1)
    """
    if a.n != b.n:
        raise SizeMismatch(f"cannot compose sizes {a.n} and {b.n}")
    return Permutation(tuple(a(b(i)) for i in range(1, a.n + 1)))


def inverse(p: Permutation) -> Permutation:
    """The inverse permutation."""
    inv = [0] * p.n
    for i, v in enumerate(p.images, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def cycles(p: Permutation, canonical: bool = True) -> CycleForm:
    """Disjoint cycle decomposition of p.

    >>> str(cycles(Permutation((4, 7, 2, 1, 3, 6, 5, 9, 8))))
    '(4,1)(6)(7,5,3,2)(9,8)'
    >>> str(cycles(Permutation((4, 7, 2, 1, 3, 6, 5, 9, 8)), canonical=False))
    '(1,4)(2,7,5,3)(6)(8,9)'
    """
    seen = [False] * (p.n + 1)
    orbits: list[list[int]] = []
    for i in range(1, p.n + 1):
        if seen[i]:
            continue
        orb = [i]
        seen[i] = True
        j = p(i)
        while j != i:
            orb.append(j)
            seen[j] = True
            j = p(j)
        orbits.append(orb)
    if not canonical:
        return CycleForm(tuple(tuple(o) for o in orbits), False)
    rotated = []
    for o in orbits:
        m = o.index(max(o))
        rotated.append(tuple(o[m:] + o[:m]))
    rotated.sort(key=lambda c: c[0])
    return CycleForm(tuple(rotated), True)


def from_cycles(cycs: Iterable[Sequence[int]], n: int | None = None) -> Permutation:
    """Build a permutation from disjoint cycles covering all of {1..n}.

    When ``n`` is omitted it is taken to be the largest element present,
    so omitted fixed points are rejected rather than silently added.
    """
    cycs = [tuple(c) for c in cycs]
    elements = [e for c in cycs for e in c]
    if not elements:
        raise NotABijection("no cycles given")
    if n is None:
        n = max(elements)
    if sorted(elements) != list(range(1, n + 1)):
        raise NotABijection(f"cycles do not partition 1..{n}: {cycs}")
    img = [0] * (n + 1)
    for c in cycs:
        for i, e in enumerate(c):
            img[e] = c[(i + 1) % len(c)]
    return Permutation(tuple(img[1:]))


_ONE_LINE_TOKEN = re.compile(r"[1-9]\d*\Z")
_CYCLE_TEXT = re.compile(r"(\(\d+(,\d+)*\))+\Z")


def parse_permutation(text: str, notation: str = "one-line") -> Permutation:
    """Parse one-line or cycle notation.

    >>> parse_permutation("(1,4)(2,7,5,3)(6)(8,9)", notation="cycle")
    Permutation(4,7,2,1,3,6,5,9,8)
    """
    if notation == "one-line":
        parts = [s.strip() for s in text.strip().split(",")]
        if not all(_ONE_LINE_TOKEN.match(s) for s in parts):
            raise ParseError(f"not comma-separated positive integers: {text!r}")
        return Permutation(tuple(int(s) for s in parts))
    if notation == "cycle":
        compact = re.sub(r"\s+", "", text)
        if not _CYCLE_TEXT.match(compact):
            raise ParseError(f"not parenthesized cycles: {text!r}")
        cycs = [
            tuple(int(tok) for tok in body.split(","))
            for body in re.findall(r"\(([^()]*)\)", compact)
        ]
        if any(e == 0 for c in cycs for e in c):
            raise ParseError("cycle elements must be positive")
        return from_cycles(cycs)
    raise ValueError(f"unknown notation: {notation!r}")


def format_cycles(cf: CycleForm) -> str:
    """Render a cycle form as text, e.g. ``(4,1)(6)(7,5,3,2)(9,8)``."""
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cf.cycles)


def format_permutation(p: Permutation, notation: str = "one-line") -> str:
    """Render in one-line or (canonical) cycle notation."""
    if notation == "one-line":
        return ",".join(map(str, p.images))
    if notation == "cycle":
        return format_cycles(cycles(p))
    raise ValueError(f"unknown notation: {notation!r}")


def lr_maxima(p: Permutation) -> tuple[int, ...]:
    """Positions i whose value exceeds everything to the left.

    Position 1 always qualifies; the position of value n always closes
    the list.

    >>> lr_maxima(Permutation((6, 5, 7, 4, 2, 10, 3, 8, 9, 1)))
    (1, 3, 6)
    """
    out = []
    best = 0
    for i, v in enumerate(p.images, start=1):
        if v > best:
            out.append(i)
            best = v
    return tuple(out)


def rl_minima(p: Permutation) -> tuple[int, ...]:
    """Positions i whose value is below everything to the right.

    >>> rl_minima(Permutation((4, 6, 5, 7, 3, 8, 1, 9, 10, 2)))
    (7, 10)
    """
    out = []
    low = p.n + 1
    for i in range(p.n, 0, -1):
        v = p(i)
        if v < low:
            out.append(i)
            low = v
    return tuple(reversed(out))


def is_indecomposable(p: Permutation) -> bool:
    """True when no proper prefix {1..p} is mapped onto itself.

    >>> is_indecomposable(Permutation((3, 1, 2, 5, 4)))
    False
    >>> is_indecomposable(Permutation((1,)))
    True
    """
    running = 0
    for i, v in enumerate(p.images[:-1], start=1):
        running = max(running, v)
        if running == i:
            return False
    return True


def blocks(p: Permutation) -> list[Permutation]:
    """Split into the unique concatenation of indecomposable blocks.

    >>> blocks(Permutation((3, 1, 2, 5, 4)))
    [Permutation(3,1,2), Permutation(2,1)]
    """
    out = []
    running = 0
    start = 0
    for i, v in enumerate(p.images, start=1):
        running = max(running, v)
        if running == i:
            out.append(Permutation(tuple(v - start for v in p.images[start:i])))
            start = i
    return out


def concat_blocks(bs: Sequence[Permutation]) -> Permutation:
    """Concatenate permutations as blocks, shifting values past each block.

    Inverse of ``blocks`` whenever every block is indecomposable.
    """
    if not bs:
        raise EmptyInput("no blocks to concatenate")
    images: list[int] = []
    offset = 0
    for b in bs:
        images.extend(v + offset for v in b.images)
        offset += b.n
    return Permutation(tuple(images))


def fundamental_transform(p: Permutation) -> Permutation:
    """Flatten the canonical cycle form into one-line notation.

    A bijection of S_n sending a permutation with k cycles to one with k
    left-to-right maxima (the cycle maxima become the maxima); it
    preserves indecomposability.

    >>> fundamental_transform(Permutation((4, 7, 2, 1, 3, 6, 5, 9, 8)))
    Permutation(4,1,6,7,5,3,2,9,8)
    """
    flat = [e for c in cycles(p).cycles for e in c]
    return Permutation(tuple(flat))


def fundamental_transform_inverse(p: Permutation) -> Permutation:
    """Close a cycle before each left-to-right maximum and multiply out.

    >>> fundamental_transform_inverse(Permutation((4, 1, 6, 7, 5, 3, 2, 9, 8)))
    Permutation(4,7,2,1,3,6,5,9,8)
    """
    maxima = list(lr_maxima(p)) + [p.n + 1]
    segs = [p.images[maxima[j] - 1 : maxima[j + 1] - 1] for j in range(len(maxima) - 1)]
    return from_cycles(segs, n=p.n)


def conjugate(p: Permutation, phi: Permutation) -> Permutation:
    """Relabel p through phi: the result sends i to phi^{-1}(p(phi(i)))."""
    if p.n != phi.n:
        raise SizeMismatch(f"cannot conjugate sizes {p.n} and {phi.n}")
    inv = [0] * (p.n + 1)
    for i, v in enumerate(phi.images, start=1):
        inv[v] = i
    return Permutation(tuple(inv[p(phi(i))] for i in range(1, p.n + 1)))
