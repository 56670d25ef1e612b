"""Hypermaps: transitive pairs of permutations acting on darts {1..n}.

A hypermap is a pair (sigma, alpha) of permutations of {1..n} whose
combined action is transitive.  The cycles of sigma are the vertices,
the cycles of alpha are the hyper-edges, and dart n is the root.  Two
hypermaps are rooted-isomorphic when some relabeling that fixes the
root conjugates one onto the other.

``psi`` sends an indecomposable permutation theta of S_{n+1} to a
hypermap on n darts: cut {1..n+1} into intervals at the left-to-right
maxima of theta and close each interval into a cycle of sigma, then
delete the value n+1 from theta's cycles to obtain alpha.  It is a
bijection onto rooted hypermaps (one canonical representative per
rooted-isomorphism class); ``psi_inverse`` canonicalizes and reads the
permutation back.  The number of cycles of alpha equals the number of
cycles of theta, and the number of cycles of sigma equals the number of
left-to-right maxima of theta.

``canonical_rooted_form`` computes the distinguished labeling of an
isomorphism class directly, so isomorphism testing is an equality
check.  In the canonical labeling every vertex is an interval of
consecutive darts traversed in increasing order, and the set of
right-to-left minima of the sequence alpha^{-1} meets {1..i_k - 1}
exactly in the left endpoints of the non-root intervals (i_k being the
left endpoint of the root's interval); ``satisfies_lemma1`` tests that
syntactic characterization.

``phi_bijection`` composes psi with its inverse on the swapped pair,
block by block: an involution of S_n exchanging the number of cycles
with the number of left-to-right maxima.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Decomposable, NotTransitive, ParseError, SizeMismatch, SizeTooSmall
from .perm import (
    CycleForm,
    Permutation,
    blocks,
    concat_blocks,
    conjugate,
    cycles,
    format_cycles,
    from_cycles,
    inverse,
    is_indecomposable,
    lr_maxima,
    rl_minima,
)

__all__ = [
    "PermPair",
    "Hypermap",
    "is_transitive",
    "make_hypermap",
    "psi",
    "satisfies_lemma1",
    "canonical_rooted_form",
    "psi_inverse",
    "rooted_isomorphic",
    "phi_bijection",
    "hypermap_to_text",
    "hypermap_from_text",
    "hypermap_to_json_dict",
    "hypermap_from_json_dict",
]


@dataclass(frozen=True)
class PermPair:
    """Two permutations of the same {1..n}, transitive or not."""

    sigma: Permutation
    alpha: Permutation

    def __post_init__(self) -> None:
        if self.sigma.n != self.alpha.n:
            raise SizeMismatch(
                f"sigma acts on 1..{self.sigma.n} but alpha on 1..{self.alpha.n}"
            )

    @property
    def n(self) -> int:
        return self.sigma.n


@dataclass(frozen=True)
class Hypermap(PermPair):
    """A transitive PermPair; construction checks transitivity."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not is_transitive(self):
            raise NotTransitive("sigma and alpha do not act transitively")


def is_transitive(pair: PermPair) -> bool:
    """Connectivity of the graph joining each dart to its two images."""
    n = pair.n
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = n
    for b in range(1, n + 1):
        for c in (pair.sigma(b), pair.alpha(b)):
            rb, rc = find(b), find(c)
            if rb != rc:
                parent[rb] = rc
                components -= 1
    return components == 1


def make_hypermap(pair: PermPair) -> Hypermap:
    """Promote a pair to a Hypermap, or raise NotTransitive."""
    return Hypermap(pair.sigma, pair.alpha)


def psi(theta: Permutation) -> Hypermap:
    """Split an indecomposable theta in S_{n+1} into a hypermap on n darts.

    sigma closes each interval between consecutive left-to-right maxima
    of theta into a cycle (the last interval runs to n after the value
    n+1 is removed); alpha is theta with n+1 deleted from its cycles.
    """
    if theta.n < 2:
        raise SizeTooSmall("need size at least 2 to split off the top value")
    if not is_indecomposable(theta):
        raise Decomposable(f"{theta!r} is decomposable")
    n = theta.n - 1
    maxima = lr_maxima(theta)
    sigma_images = [0] * (n + 1)
    bounds = list(maxima) + [n + 1]
    for j in range(len(maxima)):
        a, b = bounds[j], bounds[j + 1] - 1
        for i in range(a, b):
            sigma_images[i] = i + 1
        sigma_images[b] = a
    top_image = theta(theta.n)
    alpha_images = tuple(v if v != theta.n else top_image for v in theta.images[:n])
    return Hypermap(Permutation(tuple(sigma_images[1:])), Permutation(alpha_images))


def _interval_endpoints(sigma: Permutation) -> tuple[int, ...] | None:
    """Left endpoints when every cycle of sigma is an interval of
    consecutive integers traversed increasingly; None otherwise."""
    endpoints = []
    start = 1
    n = sigma.n
    while start <= n:
        endpoints.append(start)
        j = start
        while j < n and sigma(j) == j + 1:
            j += 1
        if sigma(j) != start:
            return None
        start = j + 1
    return tuple(endpoints)


def satisfies_lemma1(pair: PermPair) -> bool:
    """Syntactic test for the canonical labeling.

    True when (i) every cycle of sigma is an interval of consecutive
    darts in increasing cyclic order, and (ii) below the root interval's
    left endpoint, the values that are right-to-left minima of the
    sequence alpha^{-1} are exactly the other intervals' left endpoints.
    """
    endpoints = _interval_endpoints(pair.sigma)
    if endpoints is None:
        return False
    ik = endpoints[-1]
    ainv = inverse(pair.alpha)
    minima_values = {ainv(i) for i in rl_minima(ainv)}
    return {v for v in minima_values if v < ik} == set(endpoints[:-1])


def canonical_rooted_form(h: PermPair) -> tuple[Hypermap, Permutation]:
    """The distinguished labeling of h's rooted-isomorphism class.

    Returns (canonical hypermap, phi) where phi fixes the root dart n
    and conjugating h through phi gives the canonical form.  The
    labeling is read off a deterministic scan: write the root's vertex
    cycle with n last, then repeatedly take the rightmost not yet
    examined dart e of the written word and, if alpha^{-1}(e) lies on an
    unwritten vertex, prepend that vertex's cycle starting at
    alpha^{-1}(e).  phi is the word itself: phi(k) = k-th dart written.
    """
    n = h.n
    orbit = cycles(h.sigma, canonical=False).cycles
    cycle_of: dict[int, tuple[int, ...]] = {}
    for c in orbit:
        for e in c:
            cycle_of[e] = c
    root = cycle_of[n]
    cut = root.index(n) + 1
    written = list(root[cut:] + root[:cut])
    placed = set(written)
    examined = [False] * (n + 1)
    alpha_inv = inverse(h.alpha)
    while len(written) < n:
        for idx in range(len(written) - 1, -1, -1):
            e = written[idx]
            if not examined[e]:
                break
        else:
            raise NotTransitive("scan exhausted before covering every dart")
        examined[e] = True
        u = alpha_inv(e)
        if u not in placed:
            c = cycle_of[u]
            at = c.index(u)
            rot = c[at:] + c[:at]
            written[:0] = rot
            placed.update(rot)
    phi = Permutation(tuple(written))
    return Hypermap(conjugate(h.sigma, phi), conjugate(h.alpha, phi)), phi


def psi_inverse(h: PermPair) -> Permutation:
    """Rebuild the indecomposable permutation of S_{n+1} from a hypermap.

    Canonicalizes first, then reinserts the value n+1 at the root
    interval's left endpoint i_k of alpha's one-line form, moving the
    displaced value to the end.
    """
    can, _ = canonical_rooted_form(h)
    endpoints = _interval_endpoints(can.sigma)
    assert endpoints is not None
    ik = endpoints[-1]
    a = can.alpha.images
    n = can.n
    theta = a[: ik - 1] + (n + 1,) + a[ik:] + (a[ik - 1],)
    return Permutation(theta)


def rooted_isomorphic(h1: PermPair, h2: PermPair) -> bool:
    """Whether some root-fixing relabeling carries h1 onto h2."""
    if h1.n != h2.n:
        raise SizeMismatch(f"cannot compare sizes {h1.n} and {h2.n}")
    c1, _ = canonical_rooted_form(h1)
    c2, _ = canonical_rooted_form(h2)
    return c1.sigma == c2.sigma and c1.alpha == c2.alpha


def phi_bijection(p: Permutation) -> Permutation:
    """Involution of S_n exchanging cycle count with left-to-right maxima.

    Each indecomposable block of size >= 2 is split by psi, the two
    component permutations are swapped, and psi_inverse reassembles;
    1-point blocks stay fixed.  Indecomposability is preserved, so the
    blockwise extension is well defined, and the map squares to the
    identity because psi images are already canonically labeled.
    """
    out = []
    for b in blocks(p):
        if b.n == 1:
            out.append(b)
        else:
            h = psi(b)
            out.append(psi_inverse(Hypermap(h.alpha, h.sigma)))
    return concat_blocks(out)


def _orbit_form(p: Permutation) -> CycleForm:
    return cycles(p, canonical=False)


def hypermap_to_text(h: PermPair) -> str:
    """Render as ``sigma=<cycles>;alpha=<cycles>`` with min-first cycles."""
    return (
        f"sigma={format_cycles(_orbit_form(h.sigma))}"
        f";alpha={format_cycles(_orbit_form(h.alpha))}"
    )


def hypermap_from_text(text: str) -> Hypermap:
    """Parse the ``sigma=...;alpha=...`` form produced by hypermap_to_text."""
    from .perm import parse_permutation

    parts = text.strip().split(";")
    if len(parts) != 2 or not parts[0].startswith("sigma=") or not parts[1].startswith("alpha="):
        raise ParseError(f"expected 'sigma=<cycles>;alpha=<cycles>', got {text!r}")
    sigma = parse_permutation(parts[0][len("sigma=") :], notation="cycle")
    alpha = parse_permutation(parts[1][len("alpha=") :], notation="cycle")
    return Hypermap(sigma, alpha)


def hypermap_to_json_dict(h: PermPair) -> dict:
    """JSON-ready dict with min-first cycle lists for both permutations."""
    return {
        "n": h.n,
        "sigma": [list(c) for c in _orbit_form(h.sigma).cycles],
        "alpha": [list(c) for c in _orbit_form(h.alpha).cycles],
    }


def hypermap_from_json_dict(d: dict) -> Hypermap:
    """Inverse of hypermap_to_json_dict."""
    try:
        n = int(d["n"])
        sigma = from_cycles([tuple(c) for c in d["sigma"]], n=n)
        alpha = from_cycles([tuple(c) for c in d["alpha"]], n=n)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed hypermap object: {exc}") from exc
    return Hypermap(sigma, alpha)
