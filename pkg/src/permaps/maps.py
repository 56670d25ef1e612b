"""Rooted maps: hypermaps whose edge permutation pairs the darts.

A map on 2m darts is a hypermap (sigma, alpha) in which alpha is a
fixed-point-free involution; its cycles are the m edges, the cycles of
sigma the vertices.  Indecomposable fixed-point-free involutions of
S_{2m+2} (counted by i_{m+1}: 1, 2, 10, 74, ...) correspond to rooted
maps with m edges through ``psi_prime``, a specialization of the
hypermap bijection: split theta as usual, then delete the dart
j = theta(2m+2), which the splitting leaves as the unique fixed point
of the reduced edge permutation, and close the gap in the numbering.
``psi_prime_inverse`` canonicalizes the map, reinserts j, and reads the
involution back.  The number of vertices of the image equals the
number of left-to-right maxima of theta, so the vertex distribution
over all rooted maps with m edges is the polynomial M'_{m+1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumpoly import M_family, i_count
from .errors import Decomposable, NotFpf, SizeTooSmall
from .hypermap import (
    Hypermap,
    _interval_endpoints,
    canonical_rooted_form,
    hypermap_to_json_dict,
    psi,
    psi_inverse,
)
from .perm import Permutation, is_indecomposable

__all__ = [
    "RootedMap",
    "is_fpf_involution",
    "psi_prime",
    "psi_prime_inverse",
    "map_count",
    "map_count_by_vertices",
    "map_to_json_dict",
]


def is_fpf_involution(p: Permutation) -> bool:
    """True when p pairs up {1..n} with no fixed point (n must be even)."""
    if p.n % 2:
        return False
    return all(p(i) != i and p(p(i)) == i for i in range(1, p.n + 1))


@dataclass(frozen=True)
class RootedMap(Hypermap):
    """A hypermap whose alpha is a fixed-point-free involution."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not is_fpf_involution(self.alpha):
            raise NotFpf("alpha must be a fixed-point-free involution")

    @property
    def edge_count(self) -> int:
        return self.n // 2


def psi_prime(theta: Permutation) -> RootedMap:
    """Send an indecomposable pairing of S_{2m+2} to a map on 2m darts."""
    if not is_fpf_involution(theta):
        raise NotFpf(f"{theta!r} is not a fixed-point-free involution")
    if theta.n < 4:
        raise SizeTooSmall("the smallest usable pairing has size 4")
    if not is_indecomposable(theta):
        raise Decomposable(f"{theta!r} is decomposable")
    h = psi(theta)
    j = theta(theta.n)
    # deleting the top value turns the pair {j, 2m+2} into the single
    # fixed point j of alpha; remove it and renumber darts above j
    n2 = h.n - 1
    sigma_images = [0] * (n2 + 1)
    alpha_images = [0] * (n2 + 1)
    for i in range(1, h.n + 1):
        if i == j:
            continue
        s = h.sigma(i)
        if s == j:
            s = h.sigma(j)
        t = i - 1 if i > j else i
        sigma_images[t] = s - 1 if s > j else s
        a = h.alpha(i)
        alpha_images[t] = a - 1 if a > j else a
    return RootedMap(
        Permutation(tuple(sigma_images[1:])), Permutation(tuple(alpha_images[1:]))
    )


def psi_prime_inverse(m: Hypermap) -> Permutation:
    """Rebuild the indecomposable pairing of S_{2m+2} from a rooted map.

    Canonicalize, shift darts at or above the last vertex interval's
    left endpoint j up by one, reinsert j as a fixed point of alpha and
    as the new left end of the root vertex, and apply the hypermap
    reinsertion; the result pairs j with 2m+2.
    """
    if not is_fpf_involution(m.alpha):
        raise NotFpf("alpha must be a fixed-point-free involution")
    can, _ = canonical_rooted_form(m)
    endpoints = _interval_endpoints(can.sigma)
    assert endpoints is not None
    j = endpoints[-1]
    n1 = can.n + 1
    sigma_images = [0] * (n1 + 1)
    bounds = list(endpoints) + [n1 + 1]
    for t in range(len(endpoints)):
        a, b = bounds[t], bounds[t + 1] - 1
        if t == len(endpoints) - 1:
            b = n1
        for i in range(a, b):
            sigma_images[i] = i + 1
        sigma_images[b] = a
    alpha_images = [0] * (n1 + 1)
    for i in range(1, can.n + 1):
        src = i + 1 if i >= j else i
        v = can.alpha(i)
        alpha_images[src] = v + 1 if v >= j else v
    alpha_images[j] = j
    theta = psi_inverse(
        Hypermap(Permutation(tuple(sigma_images[1:])), Permutation(tuple(alpha_images[1:])))
    )
    if not is_fpf_involution(theta):
        raise AssertionError("reinsertion lost the pairing structure")
    return theta


def map_count(m: int) -> int:
    """Rooted maps with m edges: 1, 2, 10, 74, 706, ... (m = 0 counts the
    empty map)."""
    if m < 0:
        raise ValueError("need m >= 0")
    return i_count(m + 1)


def map_count_by_vertices(m: int, v: int) -> int:
    """Rooted maps with m edges and v vertices: the y^v coefficient of
    M'_{m+1}."""
    if m < 0:
        raise ValueError("need m >= 0")
    if v < 1:
        raise ValueError("need v >= 1")
    return M_family(m + 1)[1].coefficient(0, v)


def map_to_json_dict(m: Hypermap) -> dict:
    """Hypermap JSON plus an explicit map marker."""
    d = hypermap_to_json_dict(m)
    d["is_map"] = True
    return d
