"""Transition of highest l-weights under odd reflections."""

from __future__ import annotations

from typing import Sequence

from .errors import IncompatibleCounts, SameParity
from .lweight import LWeight, RatB, coprime_ratio
from .parity import Node, ParitySeq, swap_at
from .polycore import FactoredPoly, fp_shift


def _shift_ratio(p: FactoredPoly, a: int) -> RatB:
    """``p(u - a) / p(u)``."""
    return RatB(fp_shift(p, -a), p)


def reflect(z: LWeight, i: Node) -> LWeight:
    """Highest l-weight of ``L(z)`` for the parity with positions ``i, i+1`` swapped.

    With ``zeta_i/zeta_{i+1} = phi/psi`` coprime::

        new_i     = zeta_{i+1}(u) * psi(u - s_i) / psi(u)
        new_{i+1} = zeta_i(u)     * phi(u - s_i) / phi(u)
    """
    s = z.parity
    new_parity = swap_at(s, i)  # raises SameParity
    phi, psi = coprime_ratio(z, i)
    si = s[i]
    comps = list(z.components)
    comps[i - 1] = z[i + 1] * _shift_ratio(psi, si)
    comps[i] = z[i] * _shift_ratio(phi, si)
    return LWeight(comps, new_parity)


def reflect_path(z: LWeight, path: Sequence[int]) -> LWeight:
    for step, i in enumerate(path):
        try:
            z = reflect(z, Node(i))
        except SameParity as exc:
            raise SameParity(f"step {step} (node {i}): {exc}", step=step) from None
    return z


def canonical_path(source: ParitySeq, target: ParitySeq) -> list[Node]:
    """Adjacent swaps turning ``source`` into ``target``.

    Bubble sort on positions: repeatedly swap the leftmost adjacent pair that
    differs and moves an entry toward where ``target`` needs it.
    """
    if len(source) != len(target) or source.m != target.m:
        raise IncompatibleCounts(f"{source} and {target} have different (m|n)")
    cur = list(source.entries)
    goal = list(target.entries)
    path: list[Node] = []
    # rank each +1 and -1 by its occurrence; the permutation is then fixed,
    # and bubble sort by target index gives a minimal-length path.
    dest = []
    seen = {1: 0, -1: 0}
    slots = {1: [k for k, x in enumerate(goal) if x == 1], -1: [k for k, x in enumerate(goal) if x == -1]}
    for x in cur:
        dest.append(slots[x][seen[x]])
        seen[x] += 1
    while True:
        for k in range(len(cur) - 1):
            if dest[k] > dest[k + 1]:
                # same-sign neighbours never get inverted, so cur[k] != cur[k+1]
                dest[k], dest[k + 1] = dest[k + 1], dest[k]
                cur[k], cur[k + 1] = cur[k + 1], cur[k]
                path.append(Node(k + 1))
                break
        else:
            break
    assert cur == goal
    return path


def reflect_to(z: LWeight, target: ParitySeq) -> LWeight:
    return reflect_path(z, canonical_path(z.parity, target))
