"""The four built-in verification cases and admissible-prime discovery.

Each case pairs a string-group homomorphism with compatible generator images
between coordinate algebras of tubular weight types:

  A: (4,4,2)   -> (2,2,2,2; -1)          kernel of order 2
  B: (6,3,2)   -> (2,2,2,2; eps)         kernel of order 3
  C: (6,3,2)   -> (3,3,3)                kernel of order 2
  D: (2,2,2,2; lam') -> (2,2,2,2; lam)   kernel of order 2

Case D takes the target parameter lam and derives the source parameter
lam' = xi_minus/xi_plus; the displayed generator images satisfy the source
relations exactly for that orientation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CoordinateAlgebra
from .field import (ConstantBindings, ConstantUnavailable, Field, InvalidLambda,
                    PrimeField, primes, resolve_constants)
from .homverify import AlgebraHom
from .stringgroup import GroupElement, GroupHom, WeightSequence, _kernel_sort_key

CASE_IDS = ("A", "B", "C", "D")

L2222 = WeightSequence((2, 2, 2, 2))
L333 = WeightSequence((3, 3, 3))
L442 = WeightSequence((4, 4, 2))
L632 = WeightSequence((6, 3, 2))


def builtin_group_hom(case_id: str) -> GroupHom:
    """The string-group homomorphism of a built-in case (field independent)."""
    cid = str(case_id).upper()
    if cid == "A":
        x1, x2, x3, x4 = L2222.gens
        return GroupHom(L442, L2222, [x1, x2, x3 + x4])
    if cid == "B":
        x1, x2, x3, x4 = L2222.gens
        return GroupHom(L632, L2222, [x4, L2222.canonical(), x1 + x2 + x3])
    if cid == "C":
        y1, y2, y3 = L333.gens
        return GroupHom(L632, L333, [y3, y1 + y2, L333.canonical()])
    if cid == "D":
        x1, x2, x3, x4 = L2222.gens
        c = L2222.canonical()
        return GroupHom(L2222, L2222, [x1 + x3, x2 + x4, c, c])
    raise ValueError("unknown case %r" % case_id)


def expected_kernel(case_id: str) -> tuple[GroupElement, ...]:
    cid = str(case_id).upper()
    if cid == "A":
        elems = [L442.zero(), L442.element(-1, (2, 2, 0))]
    elif cid == "B":
        elems = [L632.zero(), L632.element(-1, (4, 1, 0)), L632.element(-1, (2, 2, 0))]
    elif cid == "C":
        elems = [L632.zero(), L632.element(-1, (3, 0, 1))]
    elif cid == "D":
        elems = [L2222.zero(), L2222.element(-1, (0, 0, 1, 1))]
    else:
        raise ValueError("unknown case %r" % case_id)
    return tuple(sorted(elems, key=_kernel_sort_key))


@dataclass
class CaseSpec:
    """A fully instantiated built-in case over a concrete field."""

    case_id: str
    field: Field
    constants: ConstantBindings
    lam: object
    group_hom: GroupHom
    algebra_hom: AlgebraHom
    expected_kernel: tuple[GroupElement, ...]

    def report_constants(self) -> dict:
        out = self.constants.as_dict()
        if self.lam is not None:
            out["lambda"] = str(self.lam)
        return out


def builtin_case(case_id: str, field: Field, lam=None,
                 root_pick: str = "smallest") -> CaseSpec:
    """Instantiate a built-in case, resolving its constants in ``field``.

    Raises ConstantUnavailable when a needed root is missing (choose another
    prime) and InvalidLambda for parameter problems in case D.
    """
    cid = str(case_id).upper()
    if cid not in CASE_IDS:
        raise ValueError("unknown case %r" % case_id)
    consts = resolve_constants(cid, field, lam=lam, root_pick=root_pick)
    pi = builtin_group_hom(cid)
    one = field.one

    if cid == "A":
        source = CoordinateAlgebra(L442, field, [one])
        target = CoordinateAlgebra(L2222, field, [one, field(-1)])
        x1, x2, x3, x4 = target.gens
        images = [x1, x2, x3 * x4]
        lam_used = None
    elif cid == "B":
        eps, delta = consts.epsilon, consts.delta
        source = CoordinateAlgebra(L632, field, [one])
        target = CoordinateAlgebra(L2222, field, [one, eps])
        x1, x2, x3, x4 = target.gens
        images = [x4, x2 * x2 + (eps - 1) * (x1 * x1), delta * (x1 * x2 * x3)]
        lam_used = None
    elif cid == "C":
        i, r = consts.sqrt_minus_one, consts.cbrt_minus_four
        source = CoordinateAlgebra(L632, field, [one])
        target = CoordinateAlgebra(L333, field, [one])
        y1, y2, y3 = target.gens
        images = [y3, r * (y1 * y2), i * (y1 ** 3 + y2 ** 3)]
        lam_used = None
    elif cid == "D":
        lam_used = field(lam)
        s, u = consts.sqrt_one_minus_lambda, consts.sqrt_xi_plus
        source = CoordinateAlgebra(L2222, field, [one, consts.lambda_prime])
        target = CoordinateAlgebra(L2222, field, [one, lam_used])
        x1, x2, x3, x4 = target.gens
        sq1 = x1 * x1
        sq2 = x2 * x2
        images = [u * (x1 * x3), x2 * x4, sq2 - (1 + s) * sq1, sq2 - (1 - s) * sq1]

    phi = AlgebraHom(source, target, pi, images)
    want = expected_kernel(cid)
    got = tuple(sorted(pi.kernel(), key=_kernel_sort_key))
    if got != want:
        raise AssertionError("computed kernel %s differs from the expected %s"
                             % (got, want))  # pragma: no cover
    return CaseSpec(case_id=cid, field=field, constants=consts, lam=lam_used,
                    group_hom=pi, algebra_hom=phi, expected_kernel=want)


def find_admissible_primes(case_id: str, count: int = 3, lam=None,
                           start: int = 5, stop: int = 1000) -> list[int]:
    """Smallest primes (never 2 or 3) whose fields resolve the case constants."""
    cid = str(case_id).upper()
    found = []
    for q in primes(start, stop):
        try:
            resolve_constants(cid, PrimeField(q), lam=lam)
        except (ConstantUnavailable, InvalidLambda):
            continue
        found.append(q)
        if len(found) >= count:
            break
    return found


def auto_prime(case_id: str, lam=None, start: int = 5, stop: int = 1000) -> int:
    """The smallest admissible prime, for the command-line --auto-prime flag."""
    found = find_admissible_primes(case_id, count=1, lam=lam, start=start, stop=stop)
    if not found:
        raise ConstantUnavailable(
            "no prime in [%d, %d] resolves the constants of case %s" % (start, stop, case_id)
        )
    return found[0]
