"""Exhaustive ground truth at small sizes.

Everything the other modules claim is re-derived here by direct
enumeration and statistic counting, then compared: permutations with
their joint (cycles, left-to-right maxima, right-to-left minima,
indecomposability) distribution, fixed-point-free involutions,
transitive pairs, and labeled-path censuses.  ``verify_suite`` packages
the comparisons into a deterministic pass/fail report whose failure
witnesses are the lexicographically smallest counterexamples met in
enumeration order; ``fault`` deliberately breaks one code path so the
suite can demonstrate that it catches regressions.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .dyck import (
    DELTA,
    RV,
    convert_label_scheme,
    count_labelings,
    delta,
    delta_inverse,
    enum_dyck_paths,
    enum_labelings,
    is_primitive,
    validate_labeling,
)
from .enumpoly import (
    L_family,
    M_family,
    arques_beraud_check,
    c_count,
    c_count_by_cycles,
    c_poly,
    double_factorial_odd,
    i_count,
    joint_perm_poly,
    transitive_probability,
)
from .errors import LimitExceeded
from .hypermap import (
    Hypermap,
    PermPair,
    canonical_rooted_form,
    is_transitive,
    phi_bijection,
    psi,
    psi_inverse,
    satisfies_lemma1,
)
from .maps import is_fpf_involution, map_count, psi_prime, psi_prime_inverse
from .perm import (
    Permutation,
    conjugate,
    cycles,
    format_permutation,
    identity,
    inverse,
    is_indecomposable,
    lr_maxima,
    rl_minima,
    fundamental_transform,
    fundamental_transform_inverse,
)

__all__ = [
    "enum_permutations",
    "enum_fpf_involutions",
    "DistributionTable",
    "joint_distribution",
    "count_transitive_pairs",
    "hypermap_census",
    "CheckResult",
    "VerifyReport",
    "FAULTS",
    "verify_suite",
]


def enum_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of {1..n} in lexicographic one-line order."""
    if n < 1:
        raise ValueError("need n >= 1")
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def enum_fpf_involutions(n: int) -> Iterator[Permutation]:
    """All (n-1)!! fixed-point-free involutions of {1..n}, n even,
    ordered by the partner chosen for the smallest unpaired element."""
    if n < 2 or n % 2:
        raise ValueError("need even n >= 2")

    def rec(avail: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not avail:
            yield ()
            return
        first = avail[0]
        for k in avail[1:]:
            rest = tuple(x for x in avail[1:] if x != k)
            for pairs in rec(rest):
                yield ((first, k),) + pairs

    for pairs in rec(tuple(range(1, n + 1))):
        img = [0] * (n + 1)
        for a, b in pairs:
            img[a], img[b] = b, a
        yield Permutation(tuple(img[1:]))


@dataclass
class DistributionTable:
    """Joint statistic counts for all of S_n.

    ``entries`` maps (cycles, lr_maxima, rl_minima, indecomposable) to
    the number of permutations carrying those statistics; the counts
    total n!.
    """

    n: int
    entries: dict[tuple[int, int, int, bool], int] = field(default_factory=dict)

    FIELDS = ("cycles", "lr_maxima", "rl_minima", "indecomposable")

    def total(self) -> int:
        return sum(self.entries.values())

    def project(self, fields: tuple[str, ...], indecomposable_only: bool = False) -> dict:
        """Marginal counts over the named statistics (scalar keys when a
        single field is named, tuples otherwise)."""
        idx = [self.FIELDS.index(f) for f in fields]
        out: dict = {}
        for key, cnt in self.entries.items():
            if indecomposable_only and not key[3]:
                continue
            sub = tuple(key[i] for i in idx)
            if len(sub) == 1:
                sub = sub[0]
            out[sub] = out.get(sub, 0) + cnt
        return out


def joint_distribution(n: int, limit: int = 8) -> DistributionTable:
    """Exact statistic table by direct evaluation over all of S_n."""
    if n > limit:
        raise LimitExceeded(f"n = {n} exceeds the limit {limit}")
    table = DistributionTable(n)
    for p in enum_permutations(n):
        key = (
            len(cycles(p).cycles),
            len(lr_maxima(p)),
            len(rl_minima(p)),
            is_indecomposable(p),
        )
        table.entries[key] = table.entries.get(key, 0) + 1
    return table


def _pairs_in_partition(
    n: int, partition: int, partitions: int
) -> Iterator[PermPair]:
    # deterministic split by the first permutation's lexicographic rank
    for rank, sigma in enumerate(enum_permutations(n)):
        if rank % partitions != partition:
            continue
        for alpha in enum_permutations(n):
            yield PermPair(sigma, alpha)


def count_transitive_pairs(n: int, limit: int = 5, partitions: int = 1) -> int:
    """Count transitive pairs among all n!^2 pairs by direct check.

    The scan is split by the first permutation's lexicographic rank into
    ``partitions`` deterministic slices (summed sequentially here; the
    slices are independent, so callers may fan them out).
    """
    if n > limit:
        raise LimitExceeded(f"n = {n} exceeds the limit {limit}")
    if n < 1:
        raise ValueError("need n >= 1")
    if partitions < 1:
        raise ValueError("need partitions >= 1")
    return sum(
        sum(1 for pair in _pairs_in_partition(n, part, partitions) if is_transitive(pair))
        for part in range(partitions)
    )


def hypermap_census(n: int, limit: int = 5) -> tuple[int, int]:
    """(labeled, rooted) hypermap counts on n darts by brute force:
    transitive pairs, and distinct canonical forms among them."""
    if n > limit:
        raise LimitExceeded(f"n = {n} exceeds the limit {limit}")
    if n < 1:
        raise ValueError("need n >= 1")
    labeled = 0
    forms: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    for pair in _pairs_in_partition(n, 0, 1):
        if not is_transitive(pair):
            continue
        labeled += 1
        can, _ = canonical_rooted_form(pair)
        forms.add((can.sigma.images, can.alpha.images))
    return labeled, len(forms)


# --- verification suite ------------------------------------------------------


@dataclass
class CheckResult:
    check: str
    status: str  # "pass" | "fail"
    witness: dict | None = None

    def to_json_obj(self) -> dict:
        obj: dict = {"check": self.check, "status": self.status}
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj


@dataclass
class VerifyReport:
    results: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def to_json_obj(self) -> list[dict]:
        return [r.to_json_obj() for r in self.results]

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            if r.status == "pass":
                lines.append(f"PASS {r.check}")
            else:
                lines.append(f"FAIL {r.check} witness={r.witness}")
        tally = sum(1 for r in self.results if r.status != "pass")
        lines.append(
            "all checks passed" if tally == 0 else f"{tally} check(s) failed"
        )
        return "\n".join(lines)


FAULTS = ("skip-canonicalization",)


def _one_line(p: Permutation) -> str:
    return format_permutation(p)


def _check_indecomposable_count(ctx: dict) -> dict | None:
    for n in range(1, ctx["max_n"] + 1):
        exhaustive = sum(1 for p in enum_permutations(n) if is_indecomposable(p))
        if exhaustive != c_count(n):
            return {"n": n, "exhaustive": exhaustive, "formula": c_count(n)}
    return None


def _check_stirling_triangle(ctx: dict) -> dict | None:
    for n in range(2, ctx["max_n"] + 1):
        table = ctx["tables"](n)
        by_cycles = table.project(("cycles",), indecomposable_only=True)
        by_maxima = table.project(("lr_maxima",), indecomposable_only=True)
        for k in range(1, n):
            formula = c_count_by_cycles(n, k)
            if by_cycles.get(k, 0) != formula:
                return {
                    "n": n,
                    "k": k,
                    "exhaustive": by_cycles.get(k, 0),
                    "formula": formula,
                }
            if by_maxima.get(k, 0) != formula:
                return {
                    "n": n,
                    "k": k,
                    "exhaustive_by_maxima": by_maxima.get(k, 0),
                    "formula": formula,
                }
            if c_poly(n).coefficient(k, 0) != formula:
                return {"n": n, "k": k, "poly": c_poly(n).coefficient(k, 0)}
    return None


def _check_fundamental_transform(ctx: dict) -> dict | None:
    for n in range(1, min(ctx["max_n"], 7) + 1):
        for p in enum_permutations(n):
            t = fundamental_transform(p)
            if fundamental_transform_inverse(t) != p:
                return {"n": n, "perm": _one_line(p), "reason": "round trip"}
            if len(cycles(p).cycles) != len(lr_maxima(t)):
                return {"n": n, "perm": _one_line(p), "reason": "statistic"}
            if is_indecomposable(p) != is_indecomposable(t):
                return {"n": n, "perm": _one_line(p), "reason": "block structure"}
    return None


def _check_interval_split(ctx: dict) -> dict | None:
    for size in range(2, ctx["max_n"] + 2):
        images = set()
        count = 0
        for theta in enum_permutations(size):
            if not is_indecomposable(theta):
                continue
            count += 1
            h = psi(theta)
            if not satisfies_lemma1(h):
                return {"size": size, "theta": _one_line(theta), "reason": "not canonical"}
            if len(cycles(h.alpha).cycles) != len(cycles(theta).cycles):
                return {"size": size, "theta": _one_line(theta), "reason": "edge count"}
            if len(cycles(h.sigma).cycles) != len(lr_maxima(theta)):
                return {"size": size, "theta": _one_line(theta), "reason": "vertex count"}
            if psi_inverse(h) != theta:
                return {"size": size, "theta": _one_line(theta), "reason": "round trip"}
            images.add((h.sigma.images, h.alpha.images))
        if len(images) != count or count != c_count(size):
            return {"size": size, "images": len(images), "expected": c_count(size)}
    return None


def _check_statistic_swap(ctx: dict) -> dict | None:
    for n in range(1, min(ctx["max_n"], 7) + 1):
        for p in enum_permutations(n):
            q = phi_bijection(p)
            if phi_bijection(q) != p:
                return {"n": n, "perm": _one_line(p), "reason": "not involutive"}
            if len(cycles(p).cycles) != len(lr_maxima(q)) or len(
                cycles(q).cycles
            ) != len(lr_maxima(p)):
                return {"n": n, "perm": _one_line(p), "reason": "statistic"}
    return None


def _check_hypermap_census(ctx: dict) -> dict | None:
    canon = ctx["canon"]
    for n in range(1, ctx["pair_max_n"] + 1):
        expected_labeled = math.factorial(n - 1) * c_count(n + 1)
        labeled = count_transitive_pairs(n, limit=ctx["pair_max_n"])
        if labeled != expected_labeled:
            return {"n": n, "labeled": labeled, "expected": expected_labeled}
        relabel = None
        if n >= 3:
            relabel = Permutation((2, 1) + tuple(range(3, n + 1)))
        forms: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
        for pair in _pairs_in_partition(n, 0, 1):
            if not is_transitive(pair):
                continue
            can, phi = canon(pair)
            if phi(n) != n:
                return {
                    "n": n,
                    "sigma": _one_line(pair.sigma),
                    "alpha": _one_line(pair.alpha),
                    "reason": "relabeling moves the root",
                }
            if relabel is not None:
                moved = PermPair(
                    conjugate(pair.sigma, relabel), conjugate(pair.alpha, relabel)
                )
                can2, _ = canon(moved)
                if (can.sigma, can.alpha) != (can2.sigma, can2.alpha):
                    return {
                        "n": n,
                        "sigma": _one_line(pair.sigma),
                        "alpha": _one_line(pair.alpha),
                        "relabel": _one_line(relabel),
                        "reason": "canonical form depends on the labeling",
                    }
            forms.add((can.sigma.images, can.alpha.images))
        expected_rooted = c_count(n + 1)
        if len(forms) != expected_rooted:
            return {"n": n, "rooted": len(forms), "expected": expected_rooted}
    return None


def _check_transitive_probability(ctx: dict) -> dict | None:
    for n in range(1, ctx["pair_max_n"] + 1):
        pairs = count_transitive_pairs(n, limit=ctx["pair_max_n"])
        brute = Fraction(pairs, math.factorial(n) ** 2)
        formula = transitive_probability(n)
        if brute != formula:
            return {"n": n, "brute": str(brute), "formula": str(formula)}
    return None


def _check_path_round_trip(ctx: dict) -> dict | None:
    for n in range(1, ctx["max_n"] + 1):
        words = set()
        for p in enum_permutations(n):
            w = delta(p)
            if len(w.word) != 2 * n or not validate_labeling(w):
                return {"n": n, "perm": _one_line(p), "reason": "invalid word"}
            if delta_inverse(w) != p:
                return {"n": n, "perm": _one_line(p), "reason": "round trip"}
            b0 = sum(1 for t in w.word if t == "b0")
            b1 = sum(1 for t in w.word if t == "b1")
            fixed = sum(1 for i in range(1, n + 1) if p(i) == i)
            k = len(lr_maxima(p))
            if b0 != len(cycles(p).cycles):
                return {"n": n, "perm": _one_line(p), "reason": "cycle count"}
            if is_primitive(w.underlying()) != is_indecomposable(p):
                return {"n": n, "perm": _one_line(p), "reason": "primitivity"}
            if not b1 <= k <= b1 + fixed:
                return {"n": n, "perm": _one_line(p), "reason": "maxima bound"}
            if n >= 2 and is_indecomposable(p) and b1 != k:
                return {"n": n, "perm": _one_line(p), "reason": "maxima count"}
            words.add(w.word)
        if len(words) != math.factorial(n):
            return {"n": n, "distinct": len(words), "expected": math.factorial(n)}
    return None


def _check_labeling_counts(ctx: dict) -> dict | None:
    for n in range(0, min(ctx["max_n"], 6) + 1):
        total = 0
        for word in enum_dyck_paths(n):
            expected = count_labelings(word, DELTA)
            for scheme in (DELTA, RV):
                got = 0
                for lp in enum_labelings(word, scheme):
                    got += 1
                    swapped = convert_label_scheme(lp)
                    if swapped.underlying() != word or not validate_labeling(swapped):
                        return {"word": word, "labeling": " ".join(lp.word)}
                    if convert_label_scheme(swapped) != lp:
                        return {"word": word, "labeling": " ".join(lp.word)}
                if got != expected:
                    return {"word": word, "scheme": scheme, "count": got, "expected": expected}
            total += expected
        if total != math.factorial(n):
            return {"n": n, "total": total, "expected": math.factorial(n)}
    return None


def _check_path_polynomials(ctx: dict) -> dict | None:
    for n in range(1, ctx["max_n"] + 1):
        L, Lp = L_family(n)
        table = ctx["tables"](n)
        joint = table.project(("cycles", "lr_maxima"), indecomposable_only=True)
        if n == 1:
            # seed: the one-step path has a peak b only, so no y appears
            if Lp.to_string() != "x" or L.to_string() != "x":
                return {"n": 1, "poly": Lp.to_string()}
            continue
        for (p_cyc, q_max), cnt in sorted(joint.items()):
            if Lp.coefficient(p_cyc, q_max) != cnt:
                return {
                    "n": n,
                    "cycles": p_cyc,
                    "maxima": q_max,
                    "poly": Lp.coefficient(p_cyc, q_max),
                    "exhaustive": cnt,
                }
        if sum(joint.values()) != Lp.evaluate(1, 1):
            return {"n": n, "reason": "primitive total"}
        if L.evaluate(1, 1) != math.factorial(n):
            return {"n": n, "reason": "total"}
        if n >= 2 and Lp.swap_xy() != Lp:
            return {"n": n, "reason": "symmetry"}
    return None


def _check_joint_polynomial(ctx: dict) -> dict | None:
    for n in range(1, ctx["max_n"] + 1):
        table = ctx["tables"](n)
        joint = table.project(("cycles", "lr_maxima"))
        J = joint_perm_poly(n)
        for (p_cyc, q_max), cnt in sorted(joint.items()):
            if J.coefficient(p_cyc, q_max) != cnt:
                return {
                    "n": n,
                    "cycles": p_cyc,
                    "maxima": q_max,
                    "poly": J.coefficient(p_cyc, q_max),
                    "exhaustive": cnt,
                }
        swapped = {(q, p): c for (p, q), c in joint.items()}
        if swapped != joint:
            return {"n": n, "reason": "table not symmetric"}
        by_max_cycles = table.project(("lr_maxima", "cycles"))
        by_max_minima = table.project(("lr_maxima", "rl_minima"))
        if by_max_cycles != by_max_minima:
            return {"n": n, "reason": "cycles vs right-to-left minima marginal"}
    return None


def _check_map_counts(ctx: dict) -> dict | None:
    for size in range(2, ctx["fpf_max_size"] + 1, 2):
        m = size // 2
        total = 0
        indec = 0
        for t in enum_fpf_involutions(size):
            total += 1
            if is_indecomposable(t):
                indec += 1
        if total != double_factorial_odd(m):
            return {"size": size, "total": total, "expected": double_factorial_odd(m)}
        if indec != i_count(m):
            return {"size": size, "indecomposable": indec, "formula": i_count(m)}
        if m >= 1 and map_count(m - 1) != i_count(m):
            return {"m": m - 1, "reason": "map count"}
    return None


def _check_map_round_trip(ctx: dict) -> dict | None:
    for size in range(4, ctx["fpf_max_size"] + 1, 2):
        m_edges = (size - 2) // 2
        census: Counter[int] = Counter()
        images = set()
        count = 0
        for t in enum_fpf_involutions(size):
            if not is_indecomposable(t):
                continue
            count += 1
            mp = psi_prime(t)
            if not is_fpf_involution(mp.alpha):
                return {"size": size, "theta": _one_line(t), "reason": "not a pairing"}
            vertices = len(cycles(mp.sigma).cycles)
            if vertices != len(lr_maxima(t)):
                return {"size": size, "theta": _one_line(t), "reason": "vertex count"}
            if psi_prime_inverse(mp) != t:
                return {"size": size, "theta": _one_line(t), "reason": "round trip"}
            census[vertices] += 1
            images.add((mp.sigma.images, mp.alpha.images))
        if len(images) != count:
            return {"size": size, "images": len(images), "expected": count}
        Mp = M_family(m_edges + 1)[1]
        expected = {
            v: Mp.coefficient(0, v)
            for v in range(1, m_edges + 2)
            if Mp.coefficient(0, v)
        }
        if dict(census) != expected:
            return {"size": size, "census": dict(census), "expected": expected}
    return None


def _check_map_functional_equation(ctx: dict) -> dict | None:
    order = 6
    residual = arques_beraud_check(order)
    for m in range(order + 1):
        if not residual.coefficient(m).is_zero:
            return {"order": m, "coefficient": residual.coefficient(m).to_string()}
    return None


_CHECKS: tuple[tuple[str, Callable[[dict], dict | None]], ...] = (
    ("indecomposable-count", _check_indecomposable_count),
    ("stirling-triangle", _check_stirling_triangle),
    ("fundamental-transform", _check_fundamental_transform),
    ("interval-split-round-trip", _check_interval_split),
    ("statistic-swap-involution", _check_statistic_swap),
    ("hypermap-census", _check_hypermap_census),
    ("transitive-probability", _check_transitive_probability),
    ("path-round-trip", _check_path_round_trip),
    ("labeling-counts", _check_labeling_counts),
    ("path-polynomials", _check_path_polynomials),
    ("joint-polynomial", _check_joint_polynomial),
    ("map-counts", _check_map_counts),
    ("map-round-trip", _check_map_round_trip),
    ("map-functional-equation", _check_map_functional_equation),
)


def verify_suite(
    max_n: int = 7,
    pair_max_n: int = 5,
    fpf_max_size: int = 10,
    fault: str | None = None,
) -> VerifyReport:
    """Run every cross-check at the given exhaustive sizes.

    ``max_n`` bounds the S_n sweeps (permutation statistics, bijections,
    polynomial comparisons; the interval-splitting bijection is swept
    one size higher).  ``pair_max_n`` bounds the n!^2 pair scans and
    ``fpf_max_size`` the pairing sweeps.  ``fault`` (one of ``FAULTS``)
    deliberately breaks a code path under test so the report shows a
    counterexample; failures are data in the report, never exceptions.
    """
    if not 1 <= max_n <= 8:
        raise ValueError("need 1 <= max_n <= 8")
    if not 1 <= pair_max_n <= 5:
        raise ValueError("need 1 <= pair_max_n <= 5")
    if not 2 <= fpf_max_size <= 12 or fpf_max_size % 2:
        raise ValueError("need even fpf_max_size between 2 and 12")
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}; choose from {FAULTS}")

    canon = canonical_rooted_form
    if fault == "skip-canonicalization":
        def canon(pair):  # noqa: F811 - deliberate fault stand-in
            return Hypermap(pair.sigma, pair.alpha), identity(pair.n)

    table_cache: dict[int, DistributionTable] = {}

    def tables(n: int) -> DistributionTable:
        if n not in table_cache:
            table_cache[n] = joint_distribution(n, limit=max(8, n))
        return table_cache[n]

    ctx = {
        "max_n": max_n,
        "pair_max_n": pair_max_n,
        "fpf_max_size": fpf_max_size,
        "canon": canon,
        "tables": tables,
    }
    results = []
    for name, fn in _CHECKS:
        witness = fn(ctx)
        results.append(
            CheckResult(name, "pass" if witness is None else "fail", witness)
        )
    return VerifyReport(results)
