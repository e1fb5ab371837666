"""Truncated difference-operator series ``sum_r c_r(u) D^r`` with ``D f(u) = f(u-1) D``.

``D`` stands for the shift ``e^{-d/du}``.  Coefficients are reduced rational
functions; equality checks are exact and always relative to a truncation
order ``R`` (everything modulo ``D^{R+1}``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DivideByZero, OrderMismatch
from .lweight import LWeight, RatB
from .parity import ParitySeq
from .polycore import ONE as DP_ONE
from .polycore import ZERO as DP_ZERO
from .polycore import DensePoly, dp_divmod, dp_eval, dp_gcd, dp_split_rational, fp_to_dense

DEFAULT_ORDER = 8


def _split_atoms(p: DensePoly) -> tuple[Fraction, Counter]:
    """``p = lead * prod atom^k``: linear factors over Q plus one non-split remainder."""
    if p.degree < 1:
        return p.lead, Counter()
    lead, roots, rest = dp_split_rational(p)
    atoms = Counter(DensePoly._raw((-r, Fraction(1))) for r in roots.roots)
    if rest.degree >= 1:
        atoms[rest] += 1
    return lead, atoms


def _atoms_product(atoms: Counter) -> DensePoly:
    out = DP_ONE
    for a, k in sorted(atoms.items(), key=lambda t: t[0].coeffs):
        for _ in range(k):
            out = out * a
    return out


_PRIME = (1 << 61) - 1


def _residues(p: DensePoly) -> Optional[list[int]]:
    out = []
    for c in p.coeffs:
        if c.denominator % _PRIME == 0:
            return None
        out.append(c.numerator * pow(c.denominator, -1, _PRIME) % _PRIME)
    return out


def _maybe_root(res: Optional[list[int]], r: Fraction) -> bool:
    """False only when ``r`` is certainly not a root (evaluation mod a prime)."""
    if res is None or r.denominator % _PRIME == 0:
        return True
    t = r.numerator * pow(r.denominator, -1, _PRIME) % _PRIME
    acc = 0
    for c in reversed(res):
        acc = (acc * t + c) % _PRIME
    return acc == 0


def _divides_exactly(num: DensePoly, atom: DensePoly, res=None) -> Optional[DensePoly]:
    if atom.degree == 1:
        r = -atom.coeffs[0]
        if not _maybe_root(res, r) or dp_eval(num, r) != 0:
            return None
    q, r = dp_divmod(num, atom)
    return q if r.is_zero() else None


class RatFuncDense:
    """``num/den`` with ``den`` monic and ``gcd(num, den) = 1``; zero is ``0/1``.

    Internally the denominator is a multiset of monic factors ("atoms"), so sums
    only need the lcm of two multisets and cancellation is exact division by
    individual atoms.  The reduced dense pair is produced on demand.
    """

    __slots__ = ("_num", "_atoms", "_dense")

    def __init__(self, num: DensePoly, den: DensePoly = DP_ONE, reduced: bool = False):
        if den.is_zero():
            raise DivideByZero("rational function with zero denominator")
        lead, atoms = _split_atoms(den)
        if lead != 1:
            num = DensePoly._raw(tuple(c / lead for c in num.coeffs))
        self._set(num, atoms, cancel=not reduced)

    @classmethod
    def _make(cls, num: DensePoly, atoms: Counter, cancel: bool = True) -> "RatFuncDense":
        obj = cls.__new__(cls)
        obj._set(num, atoms, cancel)
        return obj

    def _set(self, num: DensePoly, atoms: Counter, cancel: bool):
        self._dense = None
        if num.is_zero():
            self._num, self._atoms = DP_ZERO, Counter()
            return
        atoms = +atoms
        if cancel:
            res = _residues(num)
            for a in list(atoms):
                while atoms[a] and num.degree >= a.degree:
                    q = _divides_exactly(num, a, res)
                    if q is None:
                        break
                    num = q
                    res = _residues(num)
                    atoms[a] -= 1
            atoms = +atoms
        self._num, self._atoms = num, atoms

    @classmethod
    def from_ratb(cls, r: RatB) -> "RatFuncDense":
        atoms = Counter(DensePoly._raw((-x, Fraction(1))) for x in r.den.roots)
        return cls._make(fp_to_dense(r.num), atoms, cancel=False)

    @property
    def num(self) -> DensePoly:
        return self._reduced()[0]

    @property
    def den(self) -> DensePoly:
        return self._reduced()[1]

    def _reduced(self) -> tuple[DensePoly, DensePoly]:
        if self._dense is None:
            num, den = self._num, _atoms_product(self._atoms)
            # non-split atoms may still share an irreducible factor with num
            if any(a.degree > 1 for a in self._atoms):
                g = dp_gcd(num, den)
                if g.degree > 0:
                    num, den = dp_divmod(num, g)[0], dp_divmod(den, g)[0]
            self._dense = (num, den)
        return self._dense

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def _rescaled(self, common: Counter) -> DensePoly:
        return self._num * _atoms_product(common - self._atoms)

    def __add__(self, other: "RatFuncDense") -> "RatFuncDense":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        common = self._atoms | other._atoms
        return RatFuncDense._make(self._rescaled(common) + other._rescaled(common), common)

    def __neg__(self) -> "RatFuncDense":
        return RatFuncDense._make(-self._num, self._atoms, cancel=False)

    def __sub__(self, other: "RatFuncDense") -> "RatFuncDense":
        return self + (-other)

    def __mul__(self, other: "RatFuncDense") -> "RatFuncDense":
        if self.is_zero() or other.is_zero():
            return ZERO
        return RatFuncDense._make(self._num * other._num, self._atoms + other._atoms)

    def shift(self, a) -> "RatFuncDense":
        """``f(u + a)``."""
        atoms = Counter({_shift_atom(x, a): k for x, k in self._atoms.items()})
        return RatFuncDense._make(self._num.shift(a), atoms, cancel=False)

    def __eq__(self, other):
        if not isinstance(other, RatFuncDense):
            return NotImplemented
        if self._atoms == other._atoms:
            return self._num == other._num
        common = self._atoms | other._atoms
        return self._rescaled(common) == other._rescaled(common)

    def __hash__(self):
        return hash(self._reduced())

    def __repr__(self):
        return f"RatFuncDense({self.num!r}, {self.den!r})"

    def __str__(self):
        num, den = self._reduced()
        if den == DP_ONE:
            return f"{num}"
        return f"({num})/({den})"


_SHIFT_CACHE: dict = {}


def _shift_atom(x: DensePoly, a) -> DensePoly:
    key = (x, a)
    out = _SHIFT_CACHE.get(key)
    if out is None:
        if len(_SHIFT_CACHE) > 100_000:
            _SHIFT_CACHE.clear()
        out = _SHIFT_CACHE[key] = x.shift(a)
    return out


ZERO = RatFuncDense(DP_ZERO)
ONE = RatFuncDense(DP_ONE)


@dataclass(frozen=True)
class ShiftOpSeries:
    order: int
    coeffs: tuple[RatFuncDense, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be non-negative")
        c = tuple(self.coeffs)[: self.order + 1]
        c = c + (ZERO,) * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def identity(cls, order: int) -> "ShiftOpSeries":
        return cls(order, (ONE,))

    def __mul__(self, other: "ShiftOpSeries") -> "ShiftOpSeries":
        return sos_mul(self, other)

    def __str__(self):
        terms = []
        for r, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            terms.append(str(c) if r == 0 else f"[{c}]*D^{r}")
        return " + ".join(terms) + f"  (mod D^{self.order + 1})" if terms else f"0 (mod D^{self.order + 1})"


def _same_order(a: ShiftOpSeries, b: ShiftOpSeries):
    if a.order != b.order:
        raise OrderMismatch(f"truncation orders {a.order} and {b.order} differ")


def sos_mul(a: ShiftOpSeries, b: ShiftOpSeries) -> ShiftOpSeries:
    """Coefficient of ``D^k`` is ``sum_{r+t=k} a_r(u) b_t(u - r)``."""
    _same_order(a, b)
    R = a.order
    shifted = {}
    out = []
    for k in range(R + 1):
        acc = ZERO
        for r in range(k + 1):
            ar = a.coeffs[r]
            bt = b.coeffs[k - r]
            if ar.is_zero() or bt.is_zero():
                continue
            key = (k - r, r)
            if key not in shifted:
                shifted[key] = bt.shift(-r)
            acc = acc + ar * shifted[key]
        out.append(acc)
    return ShiftOpSeries(R, tuple(out))


def sos_factor(A: RatFuncDense, order: int) -> ShiftOpSeries:
    """``1 - A(u) D``."""
    return ShiftOpSeries(order, (ONE, -A))


def sos_inverse_factor(A: RatFuncDense, order: int) -> ShiftOpSeries:
    """``(1 - A(u) D)^{-1} = sum_r A(u) A(u-1) ... A(u-r+1) D^r``."""
    coeffs = [ONE]
    running = ONE
    for r in range(1, order + 1):
        if A.is_zero():
            break
        running = running * A.shift(-(r - 1))
        coeffs.append(running)
    return ShiftOpSeries(order, tuple(coeffs))


def operator_coefficient(s: ParitySeq, zeta: LWeight, y: Sequence[DensePoly], i: int) -> RatFuncDense:
    """``zeta_i(u) y_{i-1}(u+s_i) y_i(u-s_i) / (y_{i-1}(u) y_i(u))`` with ``y_0 = y_{m+n} = 1``."""
    size = len(s)

    def yk(k: int) -> DensePoly:
        return DP_ONE if k <= 0 or k >= size else y[k - 1]

    si = s[i]
    z = RatFuncDense.from_ratb(zeta[i])
    prev, cur = yk(i - 1), yk(i)
    return z * RatFuncDense(prev.shift(si) * cur.shift(-si), prev * cur)


def build_operator(s: ParitySeq, zeta: LWeight, y: Sequence[DensePoly], order: int = DEFAULT_ORDER) -> ShiftOpSeries:
    """Ordered product over ``i = 1..m+n`` of ``(1 - A_i(u) D)^{s_i}``."""
    out = ShiftOpSeries.identity(order)
    for i in range(1, len(s) + 1):
        A = operator_coefficient(s, zeta, y, i)
        factor = sos_factor(A, order) if s[i] == 1 else sos_inverse_factor(A, order)
        out = sos_mul(out, factor)
    return out


def first_mismatch(a: ShiftOpSeries, b: ShiftOpSeries) -> Optional[int]:
    _same_order(a, b)
    for r, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return r
    return None


def sos_eq(a: ShiftOpSeries, b: ShiftOpSeries) -> bool:
    return first_mismatch(a, b) is None


@dataclass(frozen=True)
class Comparison:
    equal: bool
    order: int
    first_mismatch: Optional[int]

    def to_json(self) -> dict:
        return {"equal": self.equal, "order": self.order, "first_mismatch": self.first_mismatch}


def compare_systems(before, after, order: int = DEFAULT_ORDER) -> Comparison:
    """Compare the difference operators of two Bethe systems to order ``order``."""
    a = build_operator(before.parity, before.zeta, before.y, order)
    b = build_operator(after.parity, after.zeta, after.y, order)
    r = first_mismatch(a, b)
    return Comparison(r is None, order, r)
