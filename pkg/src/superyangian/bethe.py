"""XXX-type Bethe ansatz equations and the fermionic reproduction procedure."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    DegenerateReproduction,
    InvalidLWeight,
    NotASolution,
    ParityMismatch,
    PoleAtEvaluation,
    SameParity,
)
from .lweight import LWeight, coprime_ratio
from .parity import Node, ParitySeq, swap_at
from .polycore import ONE, DensePoly, dp_divmod, dp_split_rational, fp_to_dense, to_rational
from .reflection import reflect


@dataclass(frozen=True)
class BAESystem:
    """Parity, l-weight and the monic polynomials ``y_1..y_{m+n-1}``."""

    parity: ParitySeq
    zeta: LWeight
    y: tuple[DensePoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "y", tuple(self.y))
        if self.zeta.parity != self.parity:
            raise ParityMismatch(f"zeta is over {self.zeta.parity}, system over {self.parity}")
        if len(self.y) != len(self.parity) - 1:
            raise InvalidLWeight(f"expected {len(self.parity) - 1} polynomials y_i, got {len(self.y)}")
        for k, p in enumerate(self.y, start=1):
            if not p.is_monic():
                raise InvalidLWeight(f"y_{k} = {p} is not monic")

    def y_at(self, k: int) -> DensePoly:
        """``y_k`` with ``y_0 = y_{m+n} = 1``."""
        if k <= 0 or k >= len(self.parity):
            return ONE
        return self.y[k - 1]


def bae_residual(sys: BAESystem, i: Node, t) -> Fraction:
    """Left side of the Bethe equation at node ``i`` evaluated at ``t``, minus 1."""
    t = to_rational(t)
    s = sys.parity
    si, sj = s[i], s[i + 1]
    zi, zj = sys.zeta[i], sys.zeta[i + 1]
    prev, cur, nxt = sys.y_at(i - 1), sys.y_at(i), sys.y_at(i + 1)

    def nonzero(value: Fraction, what: str) -> Fraction:
        if value == 0:
            raise PoleAtEvaluation(f"{what} vanishes at t = {t}")
        return value

    nonzero(zi.den(t), f"denominator of zeta_{i}")
    nonzero(zj.den(t), f"denominator of zeta_{i + 1}")
    ratio = zi(t) / nonzero(zj(t), f"zeta_{i + 1}")
    ratio *= prev(t + si) / nonzero(prev(t), f"y_{i - 1}(t)")
    ratio *= cur(t - si) / nonzero(cur(t + sj), f"y_{i}(t + s_{i + 1})")
    ratio *= nxt(t) / nonzero(nxt(t - sj), f"y_{i + 1}(t - s_{i + 1})")
    return ratio - 1


def reproduction_polynomial(sys: BAESystem, i: Node) -> DensePoly:
    """``phi(u) y_{i-1}(u+s_i) y_{i+1}(u) - psi(u) y_{i-1}(u) y_{i+1}(u-s_{i+1})``."""
    s = sys.parity
    si, sj = s[i], s[i + 1]
    phi, psi = coprime_ratio(sys.zeta, i)
    prev, nxt = sys.y_at(i - 1), sys.y_at(i + 1)
    left = fp_to_dense(phi) * prev.shift(si) * nxt
    right = fp_to_dense(psi) * prev * nxt.shift(-sj)
    return left - right


def _require_odd(s: ParitySeq, i: Node):
    if not 1 <= i <= len(s) - 1:
        raise IndexError(f"node {i} out of range 1..{len(s) - 1}")
    if s[i] == s[i + 1]:
        raise SameParity(f"node {i} of {s} is even; the divisibility form needs s_i != s_(i+1)")


def bae_divisibility(sys: BAESystem, i: Node) -> bool:
    _require_odd(sys.parity, i)
    return dp_divmod(reproduction_polynomial(sys, i), sys.y_at(i))[1].is_zero()


def fermionic_reproduce(sys: BAESystem, i: Node) -> BAESystem:
    """Solution for the parity swapped at node ``i``.

    ``y_i(u) * ynew(u + s_i)`` is proportional to the reproduction polynomial;
    the proportionality constant is fixed by making ``ynew`` monic.
    """
    s = sys.parity
    _require_odd(s, i)
    P = reproduction_polynomial(sys, i)
    if P.is_zero():
        raise DegenerateReproduction(f"reproduction polynomial at node {i} vanishes identically")
    q, r = dp_divmod(P, sys.y_at(i))
    if not r.is_zero():
        raise NotASolution(f"y_{i} = {sys.y_at(i)} does not divide {P}")
    new_yi = q.monic().shift(-s[i])
    ys = list(sys.y)
    ys[i - 1] = new_yi
    return BAESystem(swap_at(s, i), reflect(sys.zeta, i), tuple(ys))


@dataclass
class NodeReport:
    node: int
    odd: bool
    divisible: Optional[bool]
    residuals: Optional[dict[Fraction, Optional[Fraction]]]  # root -> residual (None on pole)
    disagreement: bool

    def to_json(self) -> dict:
        from .jsonio import rational_to_json

        out = {"node": self.node, "odd": self.odd, "divisible": self.divisible,
               "disagreement": self.disagreement}
        if self.residuals is None:
            out["residuals"] = None
        else:
            out["residuals"] = [
                {"root": rational_to_json(t), "residual": None if v is None else rational_to_json(v)}
                for t, v in sorted(self.residuals.items())
            ]
        return out


def bae_check(sys: BAESystem, nodes: Sequence[int] | None = None) -> list[NodeReport]:
    """Divisibility (odd nodes) and root residuals (when ``y_i`` splits over Q).

    The two forms can disagree for repeated roots or roots shared with the
    neighbours; disagreement is flagged rather than resolved.
    """
    s = sys.parity
    if nodes is None:
        nodes = range(1, len(s))
    reports = []
    for i in nodes:
        i = Node(i)
        odd = s[i] != s[i + 1]
        divisible = bae_divisibility(sys, i) if odd else None
        residuals = None
        yi = sys.y_at(i)
        if yi.degree >= 1:
            _, roots, rest = dp_split_rational(yi)
            if rest.degree < 1:
                residuals = {}
                for t in sorted(set(roots.roots)):
                    try:
                        residuals[t] = bae_residual(sys, i, t)
                    except PoleAtEvaluation:
                        residuals[t] = None
        elif yi.degree == 0:
            residuals = {}
        disagreement = False
        if divisible is not None and residuals is not None:
            all_zero = all(v == 0 for v in residuals.values())
            disagreement = all_zero != divisible
        reports.append(NodeReport(int(i), odd, divisible, residuals, disagreement))
    return reports
