"""Rank-one string groups of weight sequences.

A weight sequence (p_1, ..., p_t) presents an abelian group on generators
x_1, ..., x_t subject to p_1*x_1 = ... = p_t*x_t, the common value being the
canonical element c.  Every element has a unique normal form
l*c + sum(l_i * x_i) with 0 <= l_i < p_i, which is the representation used
throughout.  The module also provides the degree and mult maps, the dualizing
element, and group homomorphisms with effectiveness, fiber, kernel and
admissibility checks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class WellDefinednessError(ValueError):
    """Generator images violate the defining relations of the source group."""


class InfiniteFiberError(ValueError):
    """Fibers are only finite when the canonical element maps to nonzero degree."""


#: letters used when pretty-printing elements of the four tubular groups
_LETTERS = {(2, 2, 2, 2): "x", (3, 3, 3): "y", (4, 4, 2): "z", (6, 3, 2): "u"}


def generator_letter(weights: tuple[int, ...]) -> str:
    return _LETTERS.get(tuple(weights), "x")


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class WeightSequence:
    """A tuple of weights p_i >= 2 of length at least two."""

    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(int(p) for p in self.weights)
        object.__setattr__(self, "weights", ws)
        if len(ws) < 2:
            raise ValueError("a weight sequence needs at least two weights")
        if any(p < 2 for p in ws):
            raise ValueError("every weight must be at least 2, got %r" % (ws,))

    def __len__(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return "(%s)" % ",".join(str(p) for p in self.weights)

    @cached_property
    def lcm(self) -> int:
        return math.lcm(*self.weights)

    @cached_property
    def degree_weights(self) -> tuple[int, ...]:
        """Degrees of the generators: the i-th generator has degree lcm/p_i."""
        return tuple(self.lcm // p for p in self.weights)

    # -- elements ----------------------------------------------------------

    def normalize(self, l: int, raw: Iterable[int]) -> "GroupElement":
        """Normal form of l*c + sum(raw_i * x_i) for arbitrary integers raw_i.

        Each raw coordinate is reduced modulo its weight and the quotient is
        carried into the coefficient of the canonical element.
        """
        raw = tuple(raw)
        if len(raw) != len(self.weights):
            raise ValueError(
                "expected %d torsion coordinates, got %d" % (len(self.weights), len(raw))
            )
        carry = int(l)
        tor = []
        for r, p in zip(raw, self.weights):
            q, m = divmod(int(r), p)
            carry += q
            tor.append(m)
        return GroupElement(self, carry, tuple(tor))

    def element(self, l: int, torsion: Iterable[int]) -> "GroupElement":
        return self.normalize(l, torsion)

    def parse(self, text: str) -> "GroupElement":
        """Parse the "l;l1,l2,...,lt" element notation (entries may be any ints)."""
        try:
            head, _, tail = text.strip().partition(";")
            l = int(head)
            raw = tuple(int(v) for v in tail.split(","))
        except ValueError:
            raise ValueError("cannot parse group element from %r" % text) from None
        return self.normalize(l, raw)

    def zero(self) -> "GroupElement":
        return GroupElement(self, 0, (0,) * len(self.weights))

    def canonical(self) -> "GroupElement":
        """The canonical element c = p_i * x_i."""
        return GroupElement(self, 1, (0,) * len(self.weights))

    @cached_property
    def gens(self) -> tuple["GroupElement", ...]:
        t = len(self.weights)
        out = []
        for i in range(t):
            tor = [0] * t
            tor[i] = 1
            out.append(GroupElement(self, 0, tuple(tor)))
        return tuple(out)

    def dualizing_element(self) -> "GroupElement":
        """(t-2)*c - sum of all generators, in normal form."""
        t = len(self.weights)
        return self.normalize(t - 2, (-1,) * t)

    def is_tubular(self) -> bool:
        """True when the dualizing element is torsion, i.e. has degree zero."""
        return self.dualizing_element().degree() == 0

    def torsion_tuples(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(p) for p in self.weights))


@dataclass(frozen=True)
class GroupElement:
    """An element in normal form: l*c + sum(l_i * x_i) with 0 <= l_i < p_i."""

    weights: WeightSequence
    l: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        return "%d;%s" % (self.l, ",".join(str(v) for v in self.torsion))

    def pretty(self, letter: str | None = None) -> str:
        """Readable form like "2z1+2z2-c"."""
        letter = letter or generator_letter(self.weights.weights)
        parts = []
        for i, v in enumerate(self.torsion):
            if v:
                parts.append(("" if v == 1 else str(v)) + "%s%d" % (letter, i + 1))
        if self.l:
            parts.append(("c" if self.l == 1 else "-c" if self.l == -1 else "%dc" % self.l))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def _check_same_group(self, other: "GroupElement"):
        if self.weights != other.weights:
            raise ValueError("elements belong to different string groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check_same_group(other)
        return self.weights.normalize(
            self.l + other.l, tuple(a + b for a, b in zip(self.torsion, other.torsion))
        )

    def __neg__(self) -> "GroupElement":
        return self.weights.normalize(-self.l, tuple(-v for v in self.torsion))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __mul__(self, n: int) -> "GroupElement":
        if not isinstance(n, int):
            return NotImplemented
        return self.weights.normalize(n * self.l, tuple(n * v for v in self.torsion))

    __rmul__ = __mul__

    def degree(self) -> int:
        """Value under the degree map: l*lcm + sum(l_i * lcm/p_i)."""
        ws = self.weights
        return self.l * ws.lcm + sum(v * d for v, d in zip(self.torsion, ws.degree_weights))

    def mult(self) -> int:
        """max(l + 1, 0), read off the normal form."""
        return max(self.l + 1, 0)

    def is_zero(self) -> bool:
        return self.l == 0 and not any(self.torsion)

    def order(self) -> int | float:
        """Least n >= 1 with n*a = 0, or math.inf.

        Nonzero degree certifies infinite order; otherwise the element is
        torsion and iteration terminates well inside the safety bound.
        """
        if self.degree() != 0:
            return math.inf
        zero = self.weights.zero()
        if self == zero:
            return 1
        bound = self.weights.lcm * math.prod(self.weights.weights)
        acc = self
        for n in range(2, bound + 2):
            acc = acc + self
            if acc == zero:
                return n
        raise RuntimeError("order iteration exceeded its bound")  # pragma: no cover


def _sort_key(e: GroupElement) -> tuple:
    return (e.l, e.torsion)


def _kernel_sort_key(e: GroupElement) -> tuple:
    return (not e.is_zero(), e.l, e.torsion)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of the effectiveness and fiber mult-sum checks on a window.

    ``failures`` lists (degree, fiber mult total, target mult) for every
    element of the image whose fiber mult total disagrees with its own mult.
    ``edge_regime_ok`` records that at the top window edge every fiber
    element already sits in the affine regime (nonnegative l) and at the
    bottom edge all mult values vanish, so both tails of the window are
    conclusive.
    """

    effective: bool
    window: int
    checked: int
    failures: tuple[tuple[GroupElement, int, int], ...]
    kernel: tuple[GroupElement, ...]
    edge_regime_ok: bool

    @property
    def admissible(self) -> bool:
        return self.effective and not self.failures


class GroupHom:
    """A homomorphism between string groups, given by generator images.

    Well-definedness (q_j times the j-th image is the same element for all j)
    is validated on construction.
    """

    def __init__(self, source: WeightSequence, target: WeightSequence,
                 gen_images: Iterable[GroupElement]):
        images = tuple(gen_images)
        if len(images) != len(source.weights):
            raise ValueError(
                "expected %d generator images, got %d" % (len(source.weights), len(images))
            )
        for im in images:
            if not isinstance(im, GroupElement) or im.weights != target:
                raise ValueError("generator images must be elements of the target group")
        ref = source.weights[0] * images[0]
        for j in range(1, len(images)):
            val = source.weights[j] * images[j]
            if val != ref:
                raise WellDefinednessError(
                    "%d*image[%d] = %s but %d*image[1] = %s"
                    % (source.weights[j], j + 1, val, source.weights[0], ref)
                )
        self.source = source
        self.target = target
        self.gen_images = images
        self.c_image = ref

    def __call__(self, elem: GroupElement) -> GroupElement:
        if elem.weights != self.source:
            raise ValueError("element does not belong to the source group")
        l = elem.l * self.c_image.l
        tor = list(v * elem.l for v in self.c_image.torsion)
        for coef, im in zip(elem.torsion, self.gen_images):
            l += coef * im.l
            for i, v in enumerate(im.torsion):
                tor[i] += coef * v
        return self.target.normalize(l, tor)

    # -- image structure ---------------------------------------------------

    def is_effective(self) -> bool:
        """True when the image is infinite and surjects onto every Z/p_i.

        The image is infinite iff some generator image has nonzero degree; it
        covers Z/p_i iff the i-th torsion coordinates of the images generate
        it, i.e. their gcd with p_i is 1.
        """
        if all(im.degree() == 0 for im in self.gen_images):
            return False
        for i, p in enumerate(self.target.weights):
            coords = [im.torsion[i] for im in self.gen_images]
            coords.append(self.c_image.torsion[i])
            if math.gcd(p, *coords) != 1:
                return False
        return True

    @cached_property
    def _residues(self) -> tuple:
        """Per source torsion residue r: (r, image l, image torsion, image degree)."""
        out = []
        for r in self.source.torsion_tuples():
            img = self(GroupElement(self.source, 0, r))
            out.append((r, img.l, img.torsion, img.degree()))
        return tuple(out)

    def fiber(self, x: GroupElement) -> set[GroupElement]:
        """The complete preimage of x; empty when x is outside the image.

        Scans the source torsion residues and solves for the unique integer
        multiple of the canonical element matching the degree of x.
        """
        if x.weights != self.target:
            raise ValueError("element does not belong to the target group")
        d_c = self.c_image.degree()
        if d_c == 0:
            raise InfiniteFiberError("canonical element maps to degree 0; fibers may be infinite")
        cl, ct = self.c_image.l, self.c_image.torsion
        dx = x.degree()
        out = set()
        for r, hl, ht, hd in self._residues:
            num = dx - hd
            if num % d_c:
                continue
            l = num // d_c
            cand = self.target.normalize(l * cl + hl, tuple(l * a + b for a, b in zip(ct, ht)))
            if cand == x:
                out.add(GroupElement(self.source, l, r))
        return out

    @cached_property
    def _kernel(self) -> tuple[GroupElement, ...]:
        return tuple(sorted(self.fiber(self.target.zero()), key=_kernel_sort_key))

    def kernel(self) -> set[GroupElement]:
        return set(self._kernel)

    def window_fibers(self, window: int) -> dict[GroupElement, tuple[GroupElement, ...]]:
        """All nonempty fibers over elements with |l| <= window, keyed by degree.

        Enumerates source elements directly instead of solving per target
        element; both give the same fibers, and property tests cross-check
        them against :meth:`fiber`.
        """
        if window < 1:
            raise ValueError("window must be at least 1")
        d_c = self.c_image.degree()
        if d_c == 0:
            raise InfiniteFiberError("canonical element maps to degree 0; fibers may be infinite")
        tgt = self.target
        lcm = tgt.lcm
        max_tor = sum((p - 1) * d for p, d in zip(tgt.weights, tgt.degree_weights))
        lo, hi = -window * lcm, window * lcm + max_tor
        cl, ct = self.c_image.l, self.c_image.torsion
        buckets: dict[GroupElement, list[GroupElement]] = {}
        for r, hl, ht, hd in self._residues:
            if d_c > 0:
                lmin, lmax = _ceil_div(lo - hd, d_c), (hi - hd) // d_c
            else:
                lmin, lmax = _ceil_div(hi - hd, d_c), (lo - hd) // d_c
            for l in range(lmin, lmax + 1):
                img = tgt.normalize(l * cl + hl, tuple(l * a + b for a, b in zip(ct, ht)))
                if -window <= img.l <= window:
                    buckets.setdefault(img, []).append(GroupElement(self.source, l, r))
        return {x: tuple(sorted(ys, key=_sort_key)) for x, ys in buckets.items()}

    def check_fiber_mults(self, window: int) -> AdmissibilityReport:
        """Test the fiber mult-sum condition on every image element in the window."""
        buckets = self.window_fibers(window)
        failures = []
        edge_ok = True
        for x in sorted(buckets, key=_sort_key):
            fib = buckets[x]
            total = sum(y.mult() for y in fib)
            if total != x.mult():
                failures.append((x, total, x.mult()))
            if x.l == window and any(y.l < 0 for y in fib):
                edge_ok = False
            if x.l == -window and (x.mult() != 0 or any(y.mult() != 0 for y in fib)):
                edge_ok = False
        return AdmissibilityReport(
            effective=self.is_effective(),
            window=window,
            checked=len(buckets),
            failures=tuple(failures),
            kernel=self._kernel,
            edge_regime_ok=edge_ok,
        )

    def is_admissible(self, window: int = 64) -> AdmissibilityReport:
        """Effectiveness plus the mult-sum condition on the given window."""
        return self.check_fiber_mults(window)
