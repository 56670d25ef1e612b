"""Labeled Dyck paths and the cycle-placement bijection with permutations.

A Dyck path is a word over {a, b} with as many a's as b's in which no
prefix has more b's than a's; it is primitive when no proper nonempty
prefix balances.  Labeled paths attach a non-negative integer to every
b step, written ``b0``, ``b1``, ...; tokens are whitespace-separated in
text form, e.g. ``"a a b0 b1"``.

Two labeling schemes are supported.  In the first ("delta") a b step is
labeled 0 exactly when it immediately follows an a, and any other b
with prefix g (everything before it) carries a label between 1 and
|g|_a - |g|_b.  In the second ("rv") a b immediately following an a is
labeled 1, and every label lies between 1 and |g|_a - |g|_b.  Either
way a path with heights h_1..h_j ahead of its non-peak b's admits
exactly prod (h_i + 1) labelings, and ``convert_label_scheme`` is the
involution between the two schemes that fixes the underlying path.

``delta`` encodes a permutation by scanning 1..n: a cycle minimum of a
k-cycle contributes a^k b0 and opens a block of k slots (slot 0 taken by
the minimum, the rest reserved for the cycle's orbit in order); any
other i goes to its reserved slot, and the label records that slot's
rank among the free slots counted cyclically from the pivot, the
smallest already-placed element whose successor slot inside its own
block is still free.  ``delta_inverse`` replays the word, using each
label to pick the slot, and reads the permutation off the finished
blocks.  Cycles of the permutation correspond to b0 steps,
indecomposability to primitivity, and (for indecomposable inputs of
size >= 2) left-to-right maxima to b1 steps.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    InvalidLabeling,
    InvalidPath,
    ParseError,
    PlacementOutOfRange,
)
from .perm import Permutation, cycles

__all__ = [
    "DELTA",
    "RV",
    "LabeledDyckPath",
    "validate_dyck",
    "is_primitive",
    "validate_labeling",
    "delta",
    "delta_inverse",
    "convert_label_scheme",
    "enum_dyck_paths",
    "enum_labelings",
    "count_labelings",
    "parse_labeled_path",
    "format_labeled_path",
]

DELTA = "delta"
RV = "rv"

_TOKEN = re.compile(r"a|b\d+\Z")


def _check_scheme(scheme: str) -> None:
    if scheme not in (DELTA, RV):
        raise ValueError(f"unknown labeling scheme: {scheme!r}")


@dataclass(frozen=True)
class LabeledDyckPath:
    """A token sequence over ``a`` / ``b<k>`` plus its labeling scheme.

    Construction checks token syntax only; semantic validity against the
    scheme is the business of ``validate_labeling``, so invalid labelings
    can be built and tested.
    """

    word: tuple[str, ...]
    scheme: str

    def __post_init__(self) -> None:
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        _check_scheme(self.scheme)
        for tok in word:
            if not _TOKEN.match(tok):
                raise ParseError(f"bad path token: {tok!r}")

    def underlying(self) -> str:
        """The unlabeled a/b word."""
        return "".join("a" if t == "a" else "b" for t in self.word)

    def __str__(self) -> str:
        return format_labeled_path(self)


def validate_dyck(word: str) -> bool:
    """True for a balanced a/b word whose prefixes never dip below zero."""
    height = 0
    for ch in word:
        if ch == "a":
            height += 1
        elif ch == "b":
            height -= 1
            if height < 0:
                return False
        else:
            return False
    return height == 0


def is_primitive(word: str) -> bool:
    """True when the path only balances at the very end (length > 0)."""
    if not validate_dyck(word):
        raise InvalidPath(f"not a Dyck word: {word!r}")
    if not word:
        return False
    height = 0
    for ch in word[:-1]:
        height += 1 if ch == "a" else -1
        if height == 0:
            return False
    return True


def _label(tok: str) -> int:
    return int(tok[1:])


def validate_labeling(lp: LabeledDyckPath) -> bool:
    """Check every b label against the path shape and the scheme rules."""
    if not validate_dyck(lp.underlying()):
        return False
    na = nb = 0
    prev = ""
    for tok in lp.word:
        if tok == "a":
            na += 1
        else:
            lab = _label(tok)
            if lp.scheme == DELTA:
                if prev == "a":
                    if lab != 0:
                        return False
                elif not 1 <= lab <= na - nb:
                    return False
            else:
                if prev == "a" and lab != 1:
                    return False
                if not 1 <= lab <= na - nb:
                    return False
            nb += 1
        prev = tok[0]
    return True


class _SlotState:
    """Cycle blocks under construction: fixed-length slot arrays.

    Slot 0 of each block holds the cycle minimum; later slots hold the
    orbit in order.  The pivot is the smallest placed element whose
    successor slot inside its own block is free; free slots are ranked
    1, 2, ... cyclically rightward from just after the pivot's slot
    (through later blocks in creation order, wrapping to earlier ones).
    """

    def __init__(self) -> None:
        self.blocks: list[list[int | None]] = []
        self.slot_of: dict[int, tuple[int, int]] = {}

    def open_block(self, elt: int, k: int) -> int:
        arr: list[int | None] = [None] * k
        arr[0] = elt
        self.blocks.append(arr)
        idx = len(self.blocks) - 1
        self.slot_of[elt] = (idx, 0)
        return idx

    def place(self, elt: int, block: int, slot: int) -> None:
        self.blocks[block][slot] = elt
        self.slot_of[elt] = (block, slot)

    def _pivot(self) -> tuple[int, int] | None:
        best: tuple[int, int] | None = None
        best_elt = None
        for elt, (c, s) in self.slot_of.items():
            arr = self.blocks[c]
            if s + 1 < len(arr) and arr[s + 1] is None:
                if best_elt is None or elt < best_elt:
                    best_elt = elt
                    best = (c, s)
        return best

    def free_slots(self) -> list[tuple[int, int]]:
        """Free slots in pivot order; empty when every slot is taken."""
        start = self._pivot()
        if start is None:
            return []
        c0, s0 = start
        seq = [(c0, s) for s in range(s0 + 1, len(self.blocks[c0]))]
        for c in range(c0 + 1, len(self.blocks)):
            seq.extend((c, s) for s in range(len(self.blocks[c])))
        for c in range(c0):
            seq.extend((c, s) for s in range(len(self.blocks[c])))
        seq.extend((c0, s) for s in range(s0 + 1))
        return [(c, s) for c, s in seq if self.blocks[c][s] is None]

    def to_permutation(self) -> Permutation:
        n = sum(len(arr) for arr in self.blocks)
        img = [0] * (n + 1)
        for arr in self.blocks:
            for i, e in enumerate(arr):
                assert e is not None
                img[e] = arr[(i + 1) % len(arr)]  # type: ignore[assignment]
        return Permutation(tuple(img[1:]))


def delta(p: Permutation) -> LabeledDyckPath:
    """Encode a permutation as a labeled path of length 2n (delta scheme)."""
    orbit = cycles(p, canonical=False).cycles
    block_len: dict[int, int] = {}
    target: dict[int, tuple[int, int]] = {}
    for c in orbit:
        block_len[c[0]] = len(c)
        for t, e in enumerate(c):
            target[e] = (c[0], t)
    state = _SlotState()
    block_of_min: dict[int, int] = {}
    tokens: list[str] = []
    for i in range(1, p.n + 1):
        m, t = target[i]
        if t == 0:
            k = block_len[i]
            block_of_min[i] = state.open_block(i, k)
            tokens.extend(["a"] * k)
            tokens.append("b0")
        else:
            free = state.free_slots()
            rank = free.index((block_of_min[m], t)) + 1
            tokens.append(f"b{rank}")
            state.place(i, block_of_min[m], t)
    return LabeledDyckPath(tuple(tokens), DELTA)


def delta_inverse(lp: LabeledDyckPath) -> Permutation:
    """Decode a delta-labeled path back to its permutation."""
    if lp.scheme != DELTA:
        raise InvalidLabeling(f"expected scheme {DELTA!r}, got {lp.scheme!r}")
    if not lp.word:
        raise InvalidLabeling("empty word encodes no permutation")
    if not validate_labeling(lp):
        raise InvalidLabeling(f"not a valid delta labeling: {format_labeled_path(lp)}")
    state = _SlotState()
    element = 0
    run_a = 0
    for tok in lp.word:
        if tok == "a":
            run_a += 1
            continue
        element += 1
        lab = _label(tok)
        if lab == 0:
            state.open_block(element, run_a)
        else:
            free = state.free_slots()
            if lab > len(free):
                raise PlacementOutOfRange(
                    f"label {lab} with only {len(free)} free slots"
                )
            c, s = free[lab - 1]
            state.place(element, c, s)
        run_a = 0
    return state.to_permutation()


def convert_label_scheme(lp: LabeledDyckPath) -> LabeledDyckPath:
    """Translate between the two schemes, fixing the unlabeled path.

    A peak b (one right after an a) swaps labels 0 and 1; any other b
    with label i and prefix g goes to |g|_a - |g|_b + 1 - i.  Applying
    the conversion twice gives back the input.
    """
    if not validate_labeling(lp):
        raise InvalidLabeling(f"not a valid {lp.scheme} labeling: {format_labeled_path(lp)}")
    out: list[str] = []
    na = nb = 0
    prev = ""
    for tok in lp.word:
        if tok == "a":
            na += 1
            out.append("a")
        else:
            if prev == "a":
                out.append("b1" if lp.scheme == DELTA else "b0")
            else:
                out.append(f"b{na - nb + 1 - _label(tok)}")
            nb += 1
        prev = tok[0]
    return LabeledDyckPath(tuple(out), RV if lp.scheme == DELTA else DELTA)


def enum_dyck_paths(n: int) -> Iterator[str]:
    """All Dyck words with n a's, lexicographically (a before b)."""
    if n < 0:
        raise ValueError("need n >= 0")

    def extend(word: list[str], na: int, nb: int) -> Iterator[str]:
        if na == n and nb == n:
            yield "".join(word)
            return
        if na < n:
            word.append("a")
            yield from extend(word, na + 1, nb)
            word.pop()
        if nb < na:
            word.append("b")
            yield from extend(word, na, nb + 1)
            word.pop()

    return extend([], 0, 0)


def _label_choices(word: str, scheme: str) -> list[tuple[int, ...]]:
    choices: list[tuple[int, ...]] = []
    na = nb = 0
    prev = ""
    for ch in word:
        if ch == "a":
            na += 1
        else:
            if prev == "a":
                choices.append((0,) if scheme == DELTA else (1,))
            else:
                choices.append(tuple(range(1, na - nb + 1)))
            nb += 1
        prev = ch
    return choices


def enum_labelings(word: str, scheme: str = DELTA) -> Iterator[LabeledDyckPath]:
    """All valid labelings of a Dyck word under the given scheme."""
    if not validate_dyck(word):
        raise InvalidPath(f"not a Dyck word: {word!r}")
    _check_scheme(scheme)
    choices = _label_choices(word, scheme)
    b_positions = [i for i, ch in enumerate(word) if ch == "b"]
    template = list(word)
    for combo in itertools.product(*choices):
        toks = template[:]
        for pos, lab in zip(b_positions, combo):
            toks[pos] = f"b{lab}"
        yield LabeledDyckPath(tuple(toks), scheme)


def count_labelings(word: str, scheme: str = DELTA) -> int:
    """Number of valid labelings: the product of (height + 1) over
    non-peak b steps (identical for both schemes)."""
    if not validate_dyck(word):
        raise InvalidPath(f"not a Dyck word: {word!r}")
    _check_scheme(scheme)
    total = 1
    for c in _label_choices(word, scheme):
        total *= len(c)
    return total


def parse_labeled_path(text: str, scheme: str = DELTA) -> LabeledDyckPath:
    """Parse whitespace-separated tokens like ``a a b0 b1``."""
    tokens = tuple(text.split())
    if not tokens:
        raise ParseError("empty path text")
    return LabeledDyckPath(tokens, scheme)


def format_labeled_path(lp: LabeledDyckPath) -> str:
    """Inverse of parse_labeled_path."""
    return " ".join(lp.word)
