"""l-weights, q-characters and the finiteness criterion.

An l-weight is a tuple ``(zeta_1(u), ..., zeta_{m+n}(u))`` of rational
functions, each a ratio of two monic polynomials of equal degree so that its
expansion at infinity starts with 1.  Components are stored fully reduced
(disjoint root multisets), which makes equality exact and canonical.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import floor
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import (
    InvalidLWeight,
    NotStandardParity,
    ParityMismatch,
)
from .parity import GlWeight, Node, ParitySeq, Position, alpha_pair, kappa
from .polycore import FactoredPoly, fp_cancel, fp_mul, fp_shift, to_rational


class RatB:
    """Reduced ratio ``num(u) / den(u)`` of monic polynomials of equal degree."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: FactoredPoly = FactoredPoly(), den: FactoredPoly = FactoredPoly()):
        if num.degree != den.degree:
            raise InvalidLWeight(
                f"numerator and denominator degrees differ ({num.degree} vs {den.degree}); "
                "the series would not start with 1"
            )
        self.num, self.den = fp_cancel(num, den)
        self._hash = None

    @classmethod
    def from_roots(cls, num: Iterable = (), den: Iterable = ()) -> "RatB":
        return cls(FactoredPoly(num), FactoredPoly(den))

    @classmethod
    def _reduced(cls, num: FactoredPoly, den: FactoredPoly) -> "RatB":
        """Trusted constructor for an already reduced, equal-degree pair."""
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def from_counters(cls, num: Counter, den: Counter) -> "RatB":
        """Build from root-multiplicity counters that may share roots."""
        common = num & den
        obj = cls.__new__(cls)
        obj.num = FactoredPoly.from_counter(num - common)
        obj.den = FactoredPoly.from_counter(den - common)
        if obj.num.degree != obj.den.degree:
            raise InvalidLWeight("numerator and denominator degrees differ")
        obj._hash = None
        return obj

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __mul__(self, other: "RatB") -> "RatB":
        if other.is_one():
            return self
        if self.is_one():
            return other
        return RatB(fp_mul(self.num, other.num), fp_mul(self.den, other.den))

    def __truediv__(self, other: "RatB") -> "RatB":
        return self * other.inverse()

    def inverse(self) -> "RatB":
        obj = RatB.__new__(RatB)
        obj.num, obj.den, obj._hash = self.den, self.num, None
        return obj

    def power(self, e: int) -> "RatB":
        if e == 1:
            return self
        if e == -1:
            return self.inverse()
        if e == 0:
            return RatB()
        base = self if e > 0 else self.inverse()
        return RatB.from_counters(
            Counter({r: k * abs(e) for r, k in base.num.counter().items()}),
            Counter({r: k * abs(e) for r, k in base.den.counter().items()}),
        )

    def shift(self, a) -> "RatB":
        """``f(u + a)``."""
        obj = RatB.__new__(RatB)
        obj.num, obj.den, obj._hash = fp_shift(self.num, a), fp_shift(self.den, a), None
        return obj

    def first_coefficient(self) -> Fraction:
        """Coefficient of ``u^-1`` in the expansion at infinity."""
        return sum(self.den.roots, Fraction(0)) - sum(self.num.roots, Fraction(0))

    def __call__(self, t) -> Fraction:
        return self.num(t) / self.den(t)

    def key(self) -> tuple:
        return (self.num.roots, self.den.roots)

    def __eq__(self, other):
        if not isinstance(other, RatB):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RatB({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_one():
            return "1"
        return f"{self.num}/{self.den}"


ONE = RatB()


class LWeight:
    """Element of the l-weight group for a fixed parity sequence."""

    __slots__ = ("components", "parity", "_hash")

    def __init__(self, components: Sequence[RatB], parity: ParitySeq):
        components = tuple(components)
        if len(components) != len(parity):
            raise InvalidLWeight(f"{len(components)} components for parity of length {len(parity)}")
        self.components = components
        self.parity = parity
        self._hash = None

    @classmethod
    def unit(cls, parity: ParitySeq) -> "LWeight":
        return cls((ONE,) * len(parity), parity)

    @classmethod
    def from_roots(cls, parity: ParitySeq, comps: Sequence[tuple[Iterable, Iterable]]) -> "LWeight":
        """``comps[j] = (num_roots, den_roots)`` for each position."""
        return cls(tuple(RatB.from_roots(n, d) for n, d in comps), parity)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, j: Position) -> RatB:
        """1-based component access."""
        if not 1 <= j <= len(self.components):
            raise IndexError(f"position {j} out of range")
        return self.components[j - 1]

    def replace(self, j: Position, comp: RatB) -> "LWeight":
        c = list(self.components)
        c[j - 1] = comp
        return LWeight(c, self.parity)

    def __mul__(self, other: "LWeight") -> "LWeight":
        return lw_mul(self, other)

    def __truediv__(self, other: "LWeight") -> "LWeight":
        return lw_div(self, other)

    def inverse(self) -> "LWeight":
        return LWeight(tuple(c.inverse() for c in self.components), self.parity)

    def is_unit(self) -> bool:
        return all(c.is_one() for c in self.components)

    def key(self) -> tuple:
        return tuple(c.key() for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, LWeight):
            return NotImplemented
        return self.parity == other.parity and self.components == other.components

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.parity, self.components))
        return self._hash

    def __lt__(self, other: "LWeight") -> bool:
        return self.key() < other.key()

    def __repr__(self):
        return f"LWeight({str(self.parity)!r}, [{', '.join(map(str, self.components))}])"

    __str__ = __repr__


def _check_same(a: LWeight, b: LWeight):
    if a.parity != b.parity:
        raise ParityMismatch(f"parities {a.parity} and {b.parity} differ")


def lw_mul(a: LWeight, b: LWeight) -> LWeight:
    _check_same(a, b)
    return LWeight(tuple(x * y for x, y in zip(a.components, b.components)), a.parity)


def lw_div(a: LWeight, b: LWeight) -> LWeight:
    _check_same(a, b)
    return LWeight(tuple(x / y for x, y in zip(a.components, b.components)), a.parity)


def lw_eq(a: LWeight, b: LWeight) -> bool:
    _check_same(a, b)
    return a.components == b.components


def lw_product(weights: Iterable[LWeight], parity: ParitySeq) -> LWeight:
    out = LWeight.unit(parity)
    for w in weights:
        out = lw_mul(out, w)
    return out


def simple_lroot(s: ParitySeq, i: Node, a) -> LWeight:
    """``A_{i,a}``: component ``j`` is ``(u-a)/(u-a-(alpha_i, eps_j))``."""
    a = to_rational(a)
    comps = []
    for j in range(1, len(s) + 1):
        b = alpha_pair(s, i, j)
        comps.append(ONE if b == 0 else RatB.from_roots([a], [a + b]))
    return LWeight(comps, s)


def xfactor(s: ParitySeq, i: Position, a) -> LWeight:
    """``X_{i,a}``: ``(1 + 1/(u+a+kappa_i))^{s_i}`` at position ``i``, 1 elsewhere."""
    a = to_rational(a)
    c = a + kappa(s)[i - 1]
    comp = RatB.from_roots([-c - 1], [-c])
    if s[i] == -1:
        comp = comp.inverse()
    return LWeight(tuple(comp if j == i else ONE for j in range(1, len(s) + 1)), s)


def varpi(z: LWeight) -> GlWeight:
    """gl-weight of an l-weight: ``s_i`` times the ``u^-1`` coefficient of ``zeta_i``."""
    return GlWeight(tuple(s * c.first_coefficient() for s, c in zip(z.parity.entries, z.components)))


def level(z: LWeight) -> Fraction:
    """``s_1 * zeta_{1,1}``; raised by exactly 1 by each simple l-root when m = n = 1."""
    return z.parity[1] * z.components[0].first_coefficient()


def coprime_ratio(z: LWeight, i: Node) -> tuple[FactoredPoly, FactoredPoly]:
    """Coprime monic ``(phi, psi)`` with ``phi/psi = zeta_i / zeta_{i+1}``."""
    if not 1 <= i <= len(z) - 1:
        raise IndexError(f"node {i} out of range 1..{len(z) - 1}")
    a, b = z[i], z[i + 1]
    return fp_cancel(fp_mul(a.num, b.den), fp_mul(a.den, b.num))


def shift_ladder_solve(num: FactoredPoly, den: FactoredPoly, s: int) -> Optional[FactoredPoly]:
    """Monic ``g`` with ``num/den = g(u+s)/g(u)``, or ``None`` if none exists.

    A root ``r`` of ``g`` contributes ``(u - r + s)/(u - r)``.  Roots are grouped
    by class modulo ``Z``; inside a class, with ``x = base + t*s``, the
    multiplicity of ``g`` at ``t`` is the running sum of ``num - den``
    multiplicities strictly below ``t``.  It must stay non-negative and return
    to zero.
    """
    if s not in (1, -1):
        raise ValueError("shift must be +1 or -1")
    num, den = fp_cancel(num, den)
    if num.degree != den.degree:
        return None
    classes: dict[Fraction, Counter] = {}
    for sign, poly in ((1, num), (-1, den)):
        for r in poly.roots:
            base = r - floor(r)
            t = int((r - base) * s)
            classes.setdefault(base, Counter())[t] += sign
    g_roots: list[Fraction] = []
    for base, diff in classes.items():
        running = 0
        lo, hi = min(diff), max(diff)
        for t in range(lo, hi + 1):
            running += diff.get(t, 0)
            if running < 0:
                return None
            # multiplicity at t+1
            g_roots.extend([base + (t + 1) * s] * running)
        if running != 0:
            return None
    return FactoredPoly(g_roots)


def finite_dim_witness(z: LWeight) -> Optional[dict[int, tuple[FactoredPoly, ...]]]:
    """Polynomials certifying finite-dimensionality of ``L(z)``, or ``None``.

    Only defined for the standard parity sequence.  Node ``i != m`` maps to
    ``(g_i,)``; node ``m`` (when both m, n > 0) maps to ``(g_m, g_{m+n})``.
    """
    s = z.parity
    if not s.is_standard():
        raise NotStandardParity(f"finiteness criterion is stated for the standard sequence, got {s}")
    m = s.m
    out: dict[int, tuple[FactoredPoly, ...]] = {}
    for i in range(1, len(s)):
        phi, psi = coprime_ratio(z, Node(i))
        if i == m:
            out[i] = (phi, psi)
            continue
        g = shift_ladder_solve(phi, psi, s[i])
        if g is None:
            return None
        out[i] = (g,)
    return out


def finite_dim_check(z: LWeight) -> bool:
    return finite_dim_witness(z) is not None


# ---------------------------------------------------------------------------
# q-characters
# ---------------------------------------------------------------------------


class QChar:
    """Finitely supported integer combination of l-weights of one parity.

    Zero multiplicities are never stored.  ``diagnostics`` carries free-form
    notes (e.g. subset collisions) and does not take part in equality.
    """

    __slots__ = ("parity", "_terms", "diagnostics")

    def __init__(self, parity: ParitySeq, terms: Mapping[LWeight, int] | Iterable[tuple[LWeight, int]] = (),
                 diagnostics: tuple[str, ...] = ()):
        self.parity = parity
        acc: dict[LWeight, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, k in items:
            if w.parity != parity:
                raise ParityMismatch(f"term over {w.parity} in a character over {parity}")
            acc[w] = acc.get(w, 0) + int(k)
        self._terms = {w: k for w, k in acc.items() if k != 0}
        self.diagnostics = tuple(diagnostics)

    @classmethod
    def single(cls, w: LWeight, k: int = 1) -> "QChar":
        return cls(w.parity, {w: k})

    @property
    def terms(self) -> dict[LWeight, int]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[LWeight]:
        return iter(self.sorted_terms_keys())

    def __contains__(self, w):
        return w in self._terms

    def __getitem__(self, w: LWeight) -> int:
        return self._terms.get(w, 0)

    def items(self):
        return [(w, self._terms[w]) for w in self.sorted_terms_keys()]

    def sorted_terms_keys(self) -> list[LWeight]:
        return sorted(self._terms, key=LWeight.key)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "QChar") -> "QChar":
        if self.parity != other.parity:
            raise ParityMismatch("characters over different parities")
        acc = dict(self._terms)
        for w, k in other._terms.items():
            acc[w] = acc.get(w, 0) + k
        return QChar(self.parity, acc)

    def __sub__(self, other: "QChar") -> "QChar":
        return self + other.scale(-1)

    def scale(self, k: int) -> "QChar":
        return QChar(self.parity, {w: k * v for w, v in self._terms.items()})

    def __mul__(self, other: "QChar") -> "QChar":
        if self.parity != other.parity:
            raise ParityMismatch("characters over different parities")
        acc: dict[LWeight, int] = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                w = lw_mul(a, b)
                acc[w] = acc.get(w, 0) + x * y
        return QChar(self.parity, acc)

    def __eq__(self, other):
        if not isinstance(other, QChar):
            return NotImplemented
        return self.parity == other.parity and self._terms == other._terms

    def __hash__(self):
        return hash((self.parity, frozenset(self._terms.items())))

    def dim(self) -> int:
        return sum(self._terms.values())

    def __repr__(self):
        body = " + ".join((f"{k}*" if k != 1 else "") + "(" + ", ".join(map(str, w.components)) + ")"
                          for w, k in self.items())
        return f"QChar({str(self.parity)!r}, {body or '0'})"


def qchar_dim(q: QChar) -> int:
    return q.dim()
