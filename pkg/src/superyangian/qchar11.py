"""q-characters for gl(1|1) and how they change under the odd reflection."""

from __future__ import annotations

from typing import Sequence

from .errors import NegativeMultiplicity, NonTermination, WrongRank
from .lweight import LWeight, QChar, RatB, coprime_ratio, level
from .parity import Node, swap_at
from .polycore import FactoredPoly
from .reflection import reflect


def _require_rank_one(parity):
    if len(parity) != 2:
        raise WrongRank(f"gl(1|1) needs a parity of length 2, got {parity}")
    if parity[1] == parity[2]:
        raise WrongRank(f"{parity} is not a gl(1|1) parity sequence")


def _net(r: RatB) -> dict:
    net = {}
    for x in r.num.roots:
        net[x] = net.get(x, 0) + 1
    for x in r.den.roots:
        net[x] = net.get(x, 0) - 1
    return net


def _from_net(net: dict) -> RatB:
    num, den = [], []
    for x, e in net.items():
        if e > 0:
            num.extend([x] * e)
        elif e < 0:
            den.extend([x] * -e)
    return RatB._reduced(FactoredPoly._from_sorted(tuple(sorted(num))), FactoredPoly._from_sorted(tuple(sorted(den))))


def _bump(net: dict, x, e: int):
    v = net.get(x, 0) + e
    if v:
        net[x] = v
    else:
        del net[x]


def _sum_over_subsets(top: LWeight, roots: Sequence, shift: int, invert: bool) -> tuple[dict, bool]:
    """``sum_J [top * (f_J(u - shift)/f_J(u))^{+-1}]`` with ``f_J = prod_{r in J} (u - r)``.

    Subsets are indexed by positions, so repeated roots give colliding terms.
    """
    parity = top.parity
    sign = -1 if invert else 1
    nets = [_net(top[1]), _net(top[2])]
    acc: dict[LWeight, int] = {}

    def walk(k: int):
        if k == len(roots):
            w = LWeight((_from_net(nets[0]), _from_net(nets[1])), parity)
            acc[w] = acc.get(w, 0) + 1
            return
        walk(k + 1)
        r = roots[k]
        for net in nets:
            _bump(net, r + shift, sign)
            _bump(net, r, -sign)
        walk(k + 1)
        for net in nets:
            _bump(net, r + shift, -sign)
            _bump(net, r, sign)

    walk(0)
    collided = len(acc) < 2 ** len(roots)
    return acc, collided


def qchar_gl11(z: LWeight) -> QChar:
    """Character of the irreducible gl(1|1) module with highest l-weight ``z``.

    Sum over subsets ``J`` of the roots of ``phi`` (reduced numerator of
    ``zeta_1/zeta_2``) of ``z * (phi_J(u - s_1)/phi_J(u), same)``.
    """
    _require_rank_one(z.parity)
    phi, _ = coprime_ratio(z, Node(1))
    acc, collided = _sum_over_subsets(z, phi.roots, z.parity[1], invert=False)
    notes = ()
    if collided:
        notes = (f"repeated roots in phi = {phi}: distinct subsets gave equal l-weights; "
                 "multiplicities accumulated",)
    return QChar(z.parity, acc, diagnostics=notes)


def _pick_maximal(terms: dict[LWeight, int]) -> LWeight:
    top = max(level(w) for w in terms)
    return min((w for w in terms if level(w) == top), key=LWeight.key)


def qchar_reflect_gl11(q: QChar) -> QChar:
    """Character over the swapped parity, peeling off irreducibles from the top.

    Repeatedly take a term of maximal ``s_1 * zeta_{1,1}``, subtract the full
    irreducible character it heads, and add the character of the same module
    written for the swapped parity.
    """
    s = q.parity
    _require_rank_one(s)
    new_parity = swap_at(s, Node(1))
    s1 = s[1]
    remaining = q.terms
    if any(k < 0 for k in remaining.values()):
        raise NegativeMultiplicity("input character has negative coefficients")
    out: dict[LWeight, int] = {}
    budget = q.dim()
    steps = 0
    while remaining:
        steps += 1
        if steps > budget:
            raise NonTermination(f"exceeded {budget} peeling steps")
        zeta = _pick_maximal(remaining)
        a = remaining[zeta]
        phi, psi = coprime_ratio(zeta, Node(1))
        lower, _ = _sum_over_subsets(zeta, phi.roots, s1, invert=False)
        for w, k in lower.items():
            left = remaining.get(w, 0) - a * k
            if left < 0:
                raise NegativeMultiplicity(
                    f"subtracting the character headed by {zeta} drives {w} to {left}"
                )
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
        top = reflect(zeta, Node(1))
        upper, _ = _sum_over_subsets(top, psi.roots, s1, invert=True)
        for w, k in upper.items():
            out[w] = out.get(w, 0) + a * k
    return QChar(new_parity, out)


def qchar_dim(q: QChar) -> int:
    return q.dim()
