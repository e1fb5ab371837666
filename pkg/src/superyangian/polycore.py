"""Exact polynomial arithmetic over the rationals.

Two representations are used side by side:

* :class:`FactoredPoly` -- a monic polynomial stored as the multiset of its
  roots.  Multiplication, cancellation and argument shifts are multiset
  operations, which is all the multiplicative group of l-weights needs.
* :class:`DensePoly` -- a coefficient list, lowest degree first, for the
  additive arithmetic required by Bethe equations and difference operators.

Conversion factored -> dense always succeeds; dense -> factored only when the
polynomial splits over Q (:func:`dp_rational_roots`).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Sequence, Union

from sympy import divisors

from .errors import DivideByZero, NotDivisible, NotSplitOverRationals

RationalLike = Union[Fraction, int, str]


def to_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip().replace("−", "-"))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rational_str(q: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# factored (multiset of roots)
# ---------------------------------------------------------------------------


class FactoredPoly:
    """Monic polynomial ``prod (u - r)`` over a multiset of rational roots ``r``.

    The empty multiset is the constant polynomial 1.  Instances are immutable
    and hashable; roots are kept sorted so equality is tuple equality.
    """

    __slots__ = ("_roots", "_hash")

    def __init__(self, roots: Iterable[RationalLike] = ()):
        self._roots = tuple(sorted(to_rational(r) for r in roots))
        self._hash = None

    @classmethod
    def _from_sorted(cls, roots: tuple) -> "FactoredPoly":
        obj = cls.__new__(cls)
        obj._roots = roots
        obj._hash = None
        return obj

    @classmethod
    def from_counter(cls, counts: Counter) -> "FactoredPoly":
        return cls._from_sorted(tuple(sorted(counts.elements())))

    @property
    def roots(self) -> tuple[Fraction, ...]:
        return self._roots

    @property
    def degree(self) -> int:
        return len(self._roots)

    def counter(self) -> Counter:
        return Counter(self._roots)

    def is_one(self) -> bool:
        return not self._roots

    def __mul__(self, other: "FactoredPoly") -> "FactoredPoly":
        return fp_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, FactoredPoly):
            return NotImplemented
        return self._roots == other._roots

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._roots)
        return self._hash

    def __lt__(self, other: "FactoredPoly") -> bool:
        return (self.degree, self._roots) < (other.degree, other._roots)

    def __call__(self, t: RationalLike) -> Fraction:
        t = to_rational(t)
        out = Fraction(1)
        for r in self._roots:
            out *= t - r
        return out

    def __repr__(self):
        return f"FactoredPoly([{', '.join(rational_str(r) for r in self._roots)}])"

    def __str__(self):
        if not self._roots:
            return "1"
        parts = []
        for r, k in sorted(Counter(self._roots).items()):
            if r == 0:
                f = "u"
            elif r < 0:
                f = f"(u+{rational_str(-r)})"
            else:
                f = f"(u-{rational_str(r)})"
            parts.append(f if k == 1 else f"{f}^{k}")
        return "*".join(parts)

    def to_dense(self) -> "DensePoly":
        return fp_to_dense(self)


def fp_mul(p: FactoredPoly, q: FactoredPoly) -> FactoredPoly:
    if not q._roots:
        return p
    if not p._roots:
        return q
    return FactoredPoly._from_sorted(tuple(sorted(p._roots + q._roots)))


def fp_shift(p: FactoredPoly, a: RationalLike) -> FactoredPoly:
    """Return ``p(u + a)``: every root ``r`` moves to ``r - a``."""
    a = to_rational(a)
    if a == 0:
        return p
    return FactoredPoly._from_sorted(tuple(r - a for r in p._roots))


def fp_gcd(p: FactoredPoly, q: FactoredPoly) -> FactoredPoly:
    return FactoredPoly.from_counter(p.counter() & q.counter())


def fp_div(p: FactoredPoly, q: FactoredPoly) -> FactoredPoly:
    pc, qc = p.counter(), q.counter()
    for r, k in qc.items():
        if pc[r] < k:
            raise NotDivisible(f"{q} does not divide {p}")
    pc.subtract(qc)
    return FactoredPoly.from_counter(+pc)


def fp_cancel(p: FactoredPoly, q: FactoredPoly) -> tuple[FactoredPoly, FactoredPoly]:
    """Remove the common factor of ``p`` and ``q``; returns the coprime pair."""
    pc, qc = p.counter(), q.counter()
    common = pc & qc
    if not common:
        return p, q
    return FactoredPoly.from_counter(pc - common), FactoredPoly.from_counter(qc - common)


def fp_to_dense(p: FactoredPoly) -> "DensePoly":
    coeffs = [Fraction(1)]
    for r in p.roots:
        # multiply by (u - r)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= r * c
        coeffs = nxt
    return DensePoly(coeffs)


# ---------------------------------------------------------------------------
# dense (coefficients, lowest degree first)
# ---------------------------------------------------------------------------


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class DensePoly:
    """Polynomial in ``u`` with rational coefficients, lowest degree first.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        self.coeffs = _trim([to_rational(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "DensePoly":
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: RationalLike) -> "DensePoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "DensePoly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> "DensePoly":
        return fp_to_dense(FactoredPoly(roots))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "DensePoly":
        if not self.coeffs:
            raise DivideByZero("the zero polynomial has no monic normalization")
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return DensePoly._raw(tuple(c / lc for c in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([to_rational(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __add__(self, other):
        return dp_add(self, _as_dense(other))

    __radd__ = __add__

    def __sub__(self, other):
        return dp_sub(self, _as_dense(other))

    def __rsub__(self, other):
        return dp_sub(_as_dense(other), self)

    def __neg__(self):
        return DensePoly._raw(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        return dp_mul(self, _as_dense(other))

    __rmul__ = __mul__

    def __divmod__(self, other):
        return dp_divmod(self, _as_dense(other))

    def __floordiv__(self, other):
        return dp_divmod(self, _as_dense(other))[0]

    def __mod__(self, other):
        return dp_divmod(self, _as_dense(other))[1]

    def __call__(self, t: RationalLike) -> Fraction:
        return dp_eval(self, t)

    def shift(self, a: RationalLike) -> "DensePoly":
        return dp_shift(self, a)

    def __repr__(self):
        return f"DensePoly([{', '.join(rational_str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = rational_str(c) + ("*" + mono if mono else "")
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")


def _as_dense(x) -> DensePoly:
    if isinstance(x, DensePoly):
        return x
    if isinstance(x, FactoredPoly):
        return fp_to_dense(x)
    return DensePoly([x])


ZERO = DensePoly()
ONE = DensePoly([1])


def dp_add(p: DensePoly, q: DensePoly) -> DensePoly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return DensePoly._raw(_trim(out))


def dp_sub(p: DensePoly, q: DensePoly) -> DensePoly:
    return dp_add(p, -q)


def dp_mul(p: DensePoly, q: DensePoly) -> DensePoly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    if len(b) == 1:
        c = b[0]
        return DensePoly._raw(tuple(x * c for x in a)) if c != 1 else p
    if len(a) == 1:
        return dp_mul(q, p)
    if len(a) + len(b) > 12:
        return _kronecker_mul(a, b)
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return DensePoly._raw(tuple(out))


def _clear_denominators(a: tuple) -> tuple[list[int], int]:
    d = 1
    for c in a:
        d = lcm(d, c.denominator)
    return [c.numerator * (d // c.denominator) for c in a], d


def _kronecker_mul(a: tuple, b: tuple) -> DensePoly:
    """Integer product via packing both coefficient lists into one big integer."""
    ia, da = _clear_denominators(a)
    ib, db = _clear_denominators(b)
    bound = max(abs(x) for x in ia) * max(abs(x) for x in ib) * min(len(ia), len(ib))
    k = bound.bit_length() + 2
    pa = sum(x << (k * i) for i, x in enumerate(ia))
    pb = sum(x << (k * i) for i, x in enumerate(ib))
    prod = pa * pb
    base, half, mask = 1 << k, 1 << (k - 1), (1 << k) - 1
    out = []
    for _ in range(len(ia) + len(ib) - 1):
        digit = prod & mask
        prod >>= k
        if digit >= half:
            digit -= base
            prod += 1
        out.append(digit)
    den = da * db
    return DensePoly._raw(_trim([Fraction(x, den) for x in out]))


def dp_shift(p: DensePoly, a: RationalLike) -> DensePoly:
    """``p(u + a)`` by binomial expansion."""
    a = to_rational(a)
    c = p.coeffs
    if a == 0 or len(c) <= 1:
        return p
    n = len(c)
    powers = [Fraction(1)]
    for _ in range(n - 1):
        powers.append(powers[-1] * a)
    out = []
    for k in range(n):
        out.append(sum(c[j] * comb(j, k) * powers[j - k] for j in range(k, n)))
    return DensePoly._raw(_trim(out))


def dp_divmod(p: DensePoly, q: DensePoly) -> tuple[DensePoly, DensePoly]:
    if q.is_zero():
        raise DivideByZero("polynomial division by zero")
    dq = q.degree
    rem = list(p.coeffs)
    if len(rem) <= dq:
        return ZERO, p
    lc = q.coeffs[-1]
    qc = q.coeffs
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        f = c / lc
        quot[k - dq] = f
        base = k - dq
        for j in range(dq):
            rem[base + j] -= f * qc[j]
        rem[k] = Fraction(0)
    return DensePoly._raw(_trim(quot)), DensePoly._raw(_trim(rem[:dq]))


def dp_gcd(p: DensePoly, q: DensePoly) -> DensePoly:
    """Monic gcd by Euclid; ``gcd(0, 0)`` is 0."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, dp_divmod(a, b)[1]
        if not b.is_zero():
            b = b.monic()
    return a.monic() if not a.is_zero() else ZERO


def dp_eval(p: DensePoly, t: RationalLike) -> Fraction:
    t = to_rational(t)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def dp_divides(d: DensePoly, p: DensePoly) -> bool:
    return dp_divmod(p, d)[1].is_zero()


# ---------------------------------------------------------------------------
# dense -> factored
# ---------------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    return divisors(abs(n))


def _integer_coeffs(p: DensePoly) -> list[int]:
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


def dp_split_rational(p: DensePoly) -> tuple[Fraction, FactoredPoly, DensePoly]:
    """Extract every rational linear factor of ``p``.

    Returns ``(lead, roots, rest)`` with ``p = lead * roots * rest``; ``rest``
    is monic and has no rational root.
    """
    if p.is_zero():
        raise DivideByZero("the zero polynomial has no factorization")
    lead = p.lead
    rest = p.monic()
    roots: list[Fraction] = []
    while rest.degree >= 1 and rest.coeffs[0] == 0:
        roots.append(Fraction(0))
        rest = DensePoly._raw(rest.coeffs[1:])
    changed = True
    while changed and rest.degree >= 1:
        changed = False
        ints = _integer_coeffs(rest)
        a0, an = ints[0], ints[-1]
        f_one, f_minus = sum(ints), sum(c if k % 2 == 0 else -c for k, c in enumerate(ints))
        for qd in _divisors(an):
            for pn in _divisors(a0):
                if gcd(pn, qd) != 1:
                    continue
                for num in (pn, -pn):
                    # p/q root of an integer polynomial: (q - p) | f(1), (q + p) | f(-1)
                    if (qd - num and f_one % (qd - num)) or (qd + num and f_minus % (qd + num)):
                        continue
                    cand = Fraction(num, qd)
                    if dp_eval(rest, cand) == 0:
                        roots.append(cand)
                        rest = dp_divmod(rest, DensePoly([-cand, 1]))[0]
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    return lead, FactoredPoly(roots), rest


def dp_rational_roots(p: DensePoly) -> tuple[Fraction, FactoredPoly]:
    """Factor ``p`` as ``lead * prod (u - r)``; requires ``p`` to split over Q."""
    lead, roots, rest = dp_split_rational(p)
    if rest.degree >= 1:
        raise NotSplitOverRationals(f"{p} has an irreducible factor of degree >= 2: {rest}")
    return lead, roots


def dense_from_any(x: Union[DensePoly, FactoredPoly, Sequence[RationalLike]]) -> DensePoly:
    if isinstance(x, DensePoly):
        return x
    if isinstance(x, FactoredPoly):
        return fp_to_dense(x)
    return DensePoly(x)
