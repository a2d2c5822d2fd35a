"""Graded algebra homomorphisms and degree-by-degree isomorphism checking.

An :class:`AlgebraHom` carries a string-group homomorphism and one
homogeneous image per source generator.  Checking that the induced map onto
the restriction subalgebra of the image is an isomorphism reduces to exact
degree-wise bookkeeping: if the group map is admissible, source and target
components have equal finite dimension in every image degree, so surjectivity
(full rank of the pooled images, by exact Gaussian elimination) already gives
bijectivity there.  Injectivity is never tested separately.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import AlgebraElement, CoordinateAlgebra
from .stringgroup import AdmissibilityReport, GroupElement, GroupHom, _sort_key


class GradednessError(ValueError):
    """A generator image is not homogeneous of the degree the group map demands."""


class RelationError(ValueError):
    """The generator images do not satisfy a defining relation of the source."""


def row_rank(rows: list[list], zero) -> int:
    """Rank of a list of coefficient rows by Gaussian elimination.

    Exact coefficients make pivot choice irrelevant, so the first nonzero
    entry is always taken.
    """
    pivots: list[tuple[int, list]] = []
    for row in rows:
        row = list(row)
        for col, prow in pivots:
            if row[col] != zero:
                factor = row[col] / prow[col]
                row = [a - factor * b for a, b in zip(row, prow)]
        for col, v in enumerate(row):
            if v != zero:
                pivots.append((col, row))
                break
    return len(pivots)


@dataclass(frozen=True)
class DegreeRecord:
    """Dimension and rank bookkeeping for one degree of the image."""

    degree: GroupElement
    fiber: tuple[GroupElement, ...]
    source_dim: int
    target_dim: int
    image_rank: int

    @property
    def passed(self) -> bool:
        return self.source_dim == self.target_dim == self.image_rank

    def as_dict(self) -> dict:
        return {
            "degree": str(self.degree),
            "fiber": [str(y) for y in self.fiber],
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
            "image_rank": self.image_rank,
            "pass": self.passed,
        }


@dataclass
class VerificationResult:
    """Admissibility of the group map plus all degree records on a window."""

    window: int
    admissibility: AdmissibilityReport
    records: tuple[DegreeRecord, ...]

    @property
    def passed(self) -> bool:
        return self.admissibility.admissible and all(r.passed for r in self.records)

    def failing_records(self) -> tuple[DegreeRecord, ...]:
        return tuple(r for r in self.records if not r.passed)

    def to_report(self, case: str = "custom", field_name: str = "",
                  constants: dict | None = None, extra: dict | None = None) -> dict:
        report = {
            "case": case,
            "field": field_name,
            "window": self.window,
            "admissible": self.admissibility.admissible,
            "kernel": [str(k) for k in self.admissibility.kernel],
            "constants": dict(constants or {}),
            "records": [r.as_dict() for r in self.records],
            "summary": "pass" if self.passed else "fail",
        }
        if extra:
            report.update(extra)
        return report


def _worker_count() -> int:
    raw = os.environ.get("WPL_THREADS", "1").strip() or "1"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError("WPL_THREADS must be an integer") from None
    if n < 0:
        raise ValueError("WPL_THREADS must be nonnegative")
    if n == 0:
        return os.cpu_count() or 1
    return n


class AlgebraHom:
    """An algebra homomorphism compatible with a string-group homomorphism.

    Construction validates gradedness (each image homogeneous of the degree
    prescribed by the group map) and the source relations pushed through the
    images.  ``unchecked`` skips validation and exists for negative controls,
    letting the degree records expose a broken map instead.
    """

    def __init__(self, source: CoordinateAlgebra, target: CoordinateAlgebra,
                 group_hom: GroupHom, gen_images, validate: bool = True):
        images = tuple(gen_images)
        if group_hom.source != source.weights or group_hom.target != target.weights:
            raise ValueError("group homomorphism does not match the algebras")
        if source.field != target.field:
            raise ValueError("source and target must share the coefficient field")
        if len(images) != len(source.weights):
            raise ValueError("expected %d generator images, got %d"
                             % (len(source.weights), len(images)))
        for im in images:
            if not isinstance(im, AlgebraElement) or im.algebra != target:
                raise ValueError("generator images must live in the target algebra")
        self.source = source
        self.target = target
        self.group_hom = group_hom
        self.gen_images = images
        self._power_cache: dict[tuple[int, int], AlgebraElement] = {}
        self._mono_cache: dict[tuple, AlgebraElement] = {}
        if validate:
            self._validate()

    @classmethod
    def unchecked(cls, source, target, group_hom, gen_images) -> "AlgebraHom":
        return cls(source, target, group_hom, gen_images, validate=False)

    def _validate(self):
        for j, im in enumerate(self.gen_images):
            if im.is_zero():
                raise GradednessError("image of generator %d is zero and carries no degree"
                                      % (j + 1))
            d = im.degree()
            if d is None:
                raise GradednessError("image of generator %d is inhomogeneous" % (j + 1))
            want = self.group_hom.gen_images[j]
            if d != want:
                raise GradednessError(
                    "image of generator %d has degree %s, the group map demands %s"
                    % (j + 1, d, want)
                )
        qs = self.source.weights.weights
        for i in range(2, len(qs)):
            mu = self.source.params[i - 2]
            residual = (self.gen_images[i] ** qs[i]
                        - self.gen_images[1] ** qs[1]
                        + mu * self.gen_images[0] ** qs[0])
            if not residual.is_zero():
                raise RelationError(
                    "relation for generator %d fails, residual %s" % (i + 1, residual)
                )

    # -- application ---------------------------------------------------------

    def _gen_power(self, j: int, n: int) -> AlgebraElement:
        key = (j, n)
        hit = self._power_cache.get(key)
        if hit is None:
            if n == 0:
                hit = self.target.one
            else:
                hit = self._gen_power(j, n - 1) * self.gen_images[j]
            self._power_cache[key] = hit
        return hit

    def _monomial_image(self, exps: tuple) -> AlgebraElement:
        hit = self._mono_cache.get(exps)
        if hit is None:
            hit = self.target.one
            for j, a in enumerate(exps):
                if a:
                    hit = hit * self._gen_power(j, a)
            self._mono_cache[exps] = hit
        return hit

    def __call__(self, elem: AlgebraElement) -> AlgebraElement:
        if elem.algebra != self.source:
            raise ValueError("element does not belong to the source algebra")
        out = self.target.zero
        for e, c in elem.terms.items():
            out = out + c * self._monomial_image(e)
        return out

    # -- verification --------------------------------------------------------

    def check_surjective_at(self, x: GroupElement,
                            fiber: tuple[GroupElement, ...] | None = None) -> DegreeRecord:
        """Pool the images of all source component bases over the fiber of x
        and measure their rank inside the target component of x."""
        if fiber is None:
            fiber = tuple(sorted(self.group_hom.fiber(x), key=_sort_key))
        basis = self.target.component_basis(x)
        index = {e: i for i, e in enumerate(basis)}
        zero = self.target.field.zero
        rows = []
        source_dim = 0
        for y in fiber:
            source_dim += y.mult()
            for mono in self.source.component_basis(y):
                img = self._monomial_image(mono)
                vec = [zero] * len(basis)
                for e, c in img.terms.items():
                    pos = index.get(e)
                    if pos is None:
                        raise GradednessError(
                            "image of a monomial of degree %s leaves the component of %s"
                            % (y, x)
                        )
                    vec[pos] = c
                rows.append(vec)
        return DegreeRecord(
            degree=x,
            fiber=fiber,
            source_dim=source_dim,
            target_dim=len(basis),
            image_rank=row_rank(rows, zero),
        )

    def verify_window(self, window: int) -> VerificationResult:
        """Admissibility plus a degree record for every image degree with
        |l| <= window, in deterministic order."""
        admissibility = self.group_hom.is_admissible(window)
        buckets = self.group_hom.window_fibers(window)
        items = sorted(buckets.items(), key=lambda kv: _sort_key(kv[0]))
        workers = _worker_count()
        if workers > 1 and len(items) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                records = tuple(pool.map(
                    lambda kv: self.check_surjective_at(kv[0], kv[1]), items))
        else:
            records = tuple(self.check_surjective_at(x, fib) for x, fib in items)
        return VerificationResult(window=window, admissibility=admissibility,
                                  records=records)
