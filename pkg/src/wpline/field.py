"""Exact coefficient arithmetic: rationals and prime fields F_q, q not 2 or 3.

No floating point anywhere.  Rational elements are ``fractions.Fraction``;
prime-field elements are :class:`Fp` residues.  Root finding covers degrees
two and three, which is all the named constants need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class ConstantUnavailable(ValueError):
    """A required root does not exist in the chosen field; try another prime."""


class InvalidLambda(ValueError):
    """Parameter values 0 and 1 are excluded."""


class Fp:
    """A residue in a prime field, with exact arithmetic."""

    __slots__ = ("value", "q")

    def __init__(self, value: int, q: int):
        self.value = value % q
        self.q = q

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.q != self.q:
                raise ValueError("elements of F_%d and F_%d cannot mix" % (self.q, other.q))
            return other
        if isinstance(other, int):
            return Fp(other, self.q)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(self.value + o.value, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(self.value - o.value, self.q)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(o.value - self.value, self.q)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(self.value * o.value, self.q)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.q)
        return Fp(self.value * pow(o.value, -1, self.q), self.q)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0 and self.value == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.q)
        return Fp(pow(self.value, n, self.q), self.q)

    def __neg__(self):
        return Fp(-self.value, self.q)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.q
        if isinstance(other, Fp):
            return self.q == other.q and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.q, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return str(self.value)

    __str__ = __repr__


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes(start: int = 5, stop: int = 1000):
    """Primes in [start, stop], always skipping 2 and 3."""
    for n in range(max(start, 5), stop + 1):
        if is_prime(n):
            yield n


class Field:
    """Common interface of the two coefficient backends."""

    name: str

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def roots(self, coeffs) -> list:
        """All roots in the field of a degree-2 or degree-3 polynomial.

        ``coeffs`` are ascending; the result is sorted by the canonical order
        of the backend, so the first entry is the smallest representative.
        """
        raise NotImplementedError

    def find_root(self, coeffs):
        """Smallest root of the polynomial, or None."""
        rs = self.roots(coeffs)
        return rs[0] if rs else None

    def sqrt(self, a):
        return self.find_root([-self(a), self.zero, self.one])

    def cbrt(self, a):
        return self.find_root([-self(a), self.zero, self.zero, self.one])

    def _poly_degree(self, coeffs) -> int:
        cs = [self(c) for c in coeffs]
        while cs and cs[-1] == self.zero:
            cs.pop()
        deg = len(cs) - 1
        if deg not in (2, 3):
            raise ValueError("root search supports degrees 2 and 3, got degree %d" % deg)
        return deg


class RationalField(Field):
    """Exact rational numbers backed by fractions.Fraction."""

    name = "rationals"

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        if isinstance(value, Fp):
            raise ValueError("cannot coerce a prime-field residue into the rationals")
        raise TypeError("cannot coerce %r into the rationals" % (value,))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "RationalField()"

    def roots(self, coeffs) -> list:
        self._poly_degree(coeffs)
        cs = [self(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in cs))
        ics = [int(c * den) for c in cs]
        while ics and ics[-1] == 0:
            ics.pop()
        lead, const = ics[-1], ics[0]
        found = set()
        if const == 0:
            found.add(Fraction(0))
            while ics and ics[0] == 0:
                ics = ics[1:]
            const = ics[0]
        for p in _divisors(abs(const)):
            for q in _divisors(abs(lead)):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _poly_eval(cs, cand) == 0:
                        found.add(cand)
        return sorted(found)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _poly_eval(coeffs, x):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


class PrimeField(Field):
    """F_q for a prime q, with q different from 2 and 3."""

    def __init__(self, q: int):
        q = int(q)
        if not is_prime(q):
            raise ValueError("%d is not prime" % q)
        if q in (2, 3):
            raise ValueError("characteristic 2 and 3 are excluded")
        self.q = q
        self.name = str(q)

    def __call__(self, value):
        if isinstance(value, Fp):
            if value.q != self.q:
                raise ValueError("residue lives in F_%d, not F_%d" % (value.q, self.q))
            return value
        if isinstance(value, int):
            return Fp(value, self.q)
        if isinstance(value, str):
            return Fp(int(value), self.q)
        if isinstance(value, Fraction):
            if value.denominator % self.q == 0:
                raise ZeroDivisionError("denominator vanishes in F_%d" % self.q)
            return Fp(value.numerator * pow(value.denominator, -1, self.q), self.q)
        raise TypeError("cannot coerce %r into F_%d" % (value, self.q))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("prime", self.q))

    def __repr__(self):
        return "PrimeField(%d)" % self.q

    def roots(self, coeffs) -> list:
        self._poly_degree(coeffs)
        cs = [self(c) for c in coeffs]
        return [Fp(v, self.q) for v in range(self.q) if _poly_eval(cs, Fp(v, self.q)) == 0]


def field_from_spec(spec: str) -> Field:
    """Parse "rationals" (or "Q") or a prime written in decimal."""
    s = str(spec).strip().lower()
    if s in ("rationals", "q", "qq"):
        return RationalField()
    try:
        q = int(s)
    except ValueError:
        raise ValueError("field must be 'rationals' or a prime, got %r" % spec) from None
    return PrimeField(q)


@dataclass
class ConstantBindings:
    """Named algebraic constants resolved in a field, each one exact.

    Which entries are bound depends on the case: epsilon/delta for B,
    sqrt_minus_one/cbrt_minus_four for C, and the xi family for D.
    """

    epsilon: object = None            # root of x^2 - x + 1
    delta: object = None              # square root of 6*epsilon - 3
    sqrt_minus_one: object = None
    cbrt_minus_four: object = None
    sqrt_one_minus_lambda: object = None
    xi_plus: object = None            # (2 - lambda) + 2*sqrt(1 - lambda)
    xi_minus: object = None           # (2 - lambda) - 2*sqrt(1 - lambda)
    sqrt_xi_plus: object = None
    lambda_prime: object = None       # xi_minus / xi_plus

    def as_dict(self) -> dict:
        out = {}
        for name in ("epsilon", "delta", "sqrt_minus_one", "cbrt_minus_four",
                     "sqrt_one_minus_lambda", "xi_plus", "xi_minus",
                     "sqrt_xi_plus", "lambda_prime"):
            v = getattr(self, name)
            if v is not None:
                out[name] = str(v)
        return out


def _pick(roots: list, root_pick: str):
    if root_pick == "smallest":
        return list(roots)
    if root_pick == "largest":
        return list(reversed(roots))
    raise ValueError("root_pick must be 'smallest' or 'largest'")


def resolve_constants(case_id: str, field: Field, lam=None,
                      root_pick: str = "smallest") -> ConstantBindings:
    """Bind exactly the constants a built-in case needs, verified exactly.

    Case B backtracks over both roots of x^2 - x + 1 because the square root
    of 6*epsilon - 3 exists for at most one of them in some primes.  Case D
    needs ``lam`` outside {0, 1}, a square root of 1 - lam, and xi_plus to be
    a nonzero square.
    """
    cid = str(case_id).upper()
    if cid == "A":
        return ConstantBindings()

    if cid == "B":
        eps_roots = field.roots([field.one, -field.one, field.one])
        if not eps_roots:
            raise ConstantUnavailable("no root of x^2 - x + 1 in %s" % field.name)
        for eps in _pick(eps_roots, root_pick):
            d = 6 * eps - 3
            d_roots = field.roots([-d, field.zero, field.one])
            d_roots = [r for r in d_roots if r != field.zero]
            if d_roots:
                delta = _pick(d_roots, root_pick)[0]
                assert eps * eps - eps + 1 == field.zero
                assert delta * delta == 6 * eps - 3
                return ConstantBindings(epsilon=eps, delta=delta)
        raise ConstantUnavailable(
            "6*eps - 3 is not a nonzero square in %s for any root eps of x^2 - x + 1"
            % field.name
        )

    if cid == "C":
        i_roots = field.roots([field.one, field.zero, field.one])
        if not i_roots:
            raise ConstantUnavailable("no square root of -1 in %s" % field.name)
        r_roots = field.roots([field(4), field.zero, field.zero, field.one])
        if not r_roots:
            raise ConstantUnavailable("no cube root of -4 in %s" % field.name)
        i = _pick(i_roots, root_pick)[0]
        r = _pick(r_roots, root_pick)[0]
        assert i * i == -field.one and r * r * r == field(-4)
        return ConstantBindings(sqrt_minus_one=i, cbrt_minus_four=r)

    if cid == "D":
        if lam is None:
            raise InvalidLambda("case D needs a lambda parameter")
        lam = field(lam)
        if lam == field.zero or lam == field.one:
            raise InvalidLambda("lambda must avoid 0 and 1")
        s_roots = field.roots([lam - 1, field.zero, field.one])
        if not s_roots:
            raise ConstantUnavailable("no square root of 1 - lambda in %s" % field.name)
        s = _pick(s_roots, root_pick)[0]
        xi_plus = (2 - lam) + 2 * s
        xi_minus = (2 - lam) - 2 * s
        if xi_plus == field.zero:
            raise ConstantUnavailable("xi_plus vanishes")  # pragma: no cover
        u_roots = field.roots([-xi_plus, field.zero, field.one])
        u_roots = [r for r in u_roots if r != field.zero]
        if not u_roots:
            raise ConstantUnavailable("xi_plus = %s is not a nonzero square in %s"
                                      % (xi_plus, field.name))
        u = _pick(u_roots, root_pick)[0]
        lam_prime = xi_minus / xi_plus
        if lam_prime == field.zero or lam_prime == field.one:
            raise InvalidLambda("derived parameter landed in {0, 1}")  # pragma: no cover
        assert s * s == 1 - lam
        assert u * u == xi_plus
        assert xi_plus * xi_minus == lam * lam
        return ConstantBindings(
            sqrt_one_minus_lambda=s, xi_plus=xi_plus, xi_minus=xi_minus,
            sqrt_xi_plus=u, lambda_prime=lam_prime,
        )

    raise ValueError("unknown case %r" % case_id)
