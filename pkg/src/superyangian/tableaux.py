"""Skew diagrams, semi-standard s-tableaux and skew-representation characters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import NotContained, TableauOverflow
from .lweight import LWeight, QChar, RatB
from .parity import Partition, ParitySeq, alphabet_order, is_hook, kappa
from .polycore import FactoredPoly

DEFAULT_TABLEAU_CAP = 10**6


@dataclass(frozen=True)
class SkewDiagram:
    outer: Partition
    inner: Partition = Partition(())

    def __post_init__(self):
        for i in range(1, max(len(self.outer), len(self.inner)) + 1):
            if self.inner[i] > self.outer[i]:
                raise NotContained(f"{self.inner} is not contained in {self.outer} (row {i})")

    def cells(self) -> list[tuple[int, int]]:
        return list(_cells(self.outer, self.inner))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __contains__(self, cell) -> bool:
        i, j = cell
        return i >= 1 and self.inner[i] < j <= self.outer[i]

    def __str__(self):
        return f"({self.outer})/({self.inner})"


@lru_cache(maxsize=4096)
def _cells(outer: Partition, inner: Partition) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(1, len(outer) + 1) for j in range(inner[i] + 1, outer[i] + 1))


@lru_cache(maxsize=None)
def _frac(r: int) -> Fraction:
    return Fraction(r)


def skew_cells(d: SkewDiagram) -> list[tuple[int, int, int]]:
    """``(row, column, content)`` for every cell, row-major."""
    return [(i, j, j - i) for i, j in d.cells()]


def is_hook_pair(d: SkewDiagram, m_inner: int, n_inner: int, m: int, n: int) -> bool:
    """Whether ``outer`` is an (m'+m|n'+n)-hook and ``inner`` an (m'|n')-hook."""
    return is_hook(d.outer, m_inner + m, n_inner + n) and is_hook(d.inner, m_inner, n_inner)


@dataclass(frozen=True)
class STableau:
    """Filling of a skew diagram by positions ``1..m+n`` (letters via the s-order)."""

    diagram: SkewDiagram
    entries: tuple[int, ...]  # aligned with diagram.cells()

    def __getitem__(self, cell: tuple[int, int]) -> int:
        return dict(zip(self.diagram.cells(), self.entries))[cell]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.diagram.cells(), self.entries))

    def rows(self, s: ParitySeq | None = None) -> list[list[str]]:
        """Entry strings by row; ``None`` marks cells of the inner shape."""
        letters = alphabet_order(s) if s is not None else None
        filled = self.as_dict()
        out = []
        for i in range(1, len(self.diagram.outer) + 1):
            row = []
            for j in range(1, self.diagram.outer[i] + 1):
                if (i, j) in filled:
                    k = filled[(i, j)]
                    row.append(str(letters[k - 1]) if letters else str(k))
                else:
                    row.append(None)
            out.append(row)
        return out


def is_semistandard(s: ParitySeq, t: STableau) -> bool:
    filled = t.as_dict()
    for (i, j), k in filled.items():
        left = filled.get((i, j - 1))
        if left is not None and (k < left or (k == left and s[k] == -1)):
            return False
        up = filled.get((i - 1, j))
        if up is not None and (k < up or (k == up and s[k] == 1)):
            return False
    return True


def iter_ssyt(s: ParitySeq, d: SkewDiagram) -> Iterator[STableau]:
    """Depth-first fill in row-major order; yields in lexicographic order.

    Rows weakly increase (strictly on barred letters), columns weakly
    increase (strictly on unbarred letters), comparing in the s-order.
    """
    cells = d.cells()
    index = {c: k for k, c in enumerate(cells)}
    size = len(s)
    sign = (0,) + s.entries
    left_of = [index.get((i, j - 1), -1) for i, j in cells]
    above = [index.get((i - 1, j), -1) for i, j in cells]
    fill = [0] * len(cells)

    def lower_bound(k: int) -> int:
        lo = 1
        lk = left_of[k]
        if lk >= 0:
            v = fill[lk]
            lo = v if sign[v] == 1 else v + 1
        uk = above[k]
        if uk >= 0:
            v = fill[uk]
            lo = max(lo, v if sign[v] == -1 else v + 1)
        return lo

    def rec(k: int):
        if k == len(cells):
            yield STableau(d, tuple(fill))
            return
        for v in range(lower_bound(k), size + 1):
            fill[k] = v
            yield from rec(k + 1)

    yield from rec(0)


def enumerate_ssyt(s: ParitySeq, d: SkewDiagram, cap: int = DEFAULT_TABLEAU_CAP) -> list[STableau]:
    out = []
    for t in iter_ssyt(s, d):
        out.append(t)
        if len(out) > cap:
            raise TableauOverflow(f"more than {cap} tableaux of shape {d}")
    return out


def count_ssyt(s: ParitySeq, d: SkewDiagram, cap: int = DEFAULT_TABLEAU_CAP) -> int:
    n = 0
    for _ in iter_ssyt(s, d):
        n += 1
        if n > cap:
            raise TableauOverflow(f"more than {cap} tableaux of shape {d}")
    return n


_kappa = lru_cache(maxsize=256)(kappa)


def tableau_lweight(s: ParitySeq, t: STableau) -> LWeight:
    """Product of ``X_{T(i,j), c(i,j)}`` over the cells."""
    kap = _kappa(s)
    size = len(s)
    # net[p][r]: exponent of (u - r) in component p; integer keys keep this cheap
    net: list[dict[int, int]] = [{} for _ in range(size)]
    for (i, j), p in zip(_cells(t.diagram.outer, t.diagram.inner), t.entries):
        c = j - i + kap[p - 1]
        sign = s.entries[p - 1]
        # (u + c + 1)/(u + c), inverted for s_p = -1
        acc = net[p - 1]
        acc[-c - 1] = acc.get(-c - 1, 0) + sign
        acc[-c] = acc.get(-c, 0) - sign
    comps = []
    for acc in net:
        items = sorted(acc.items())
        num = [_frac(r) for r, k in items for _ in range(k)]
        den = [_frac(r) for r, k in items for _ in range(-k)]
        comps.append(RatB._reduced(FactoredPoly._from_sorted(tuple(num)), FactoredPoly._from_sorted(tuple(den))))
    return LWeight(tuple(comps), s)


def skew_qchar(s: ParitySeq, d: SkewDiagram, cap: int = DEFAULT_TABLEAU_CAP) -> QChar:
    acc: dict[LWeight, int] = {}
    for t in enumerate_ssyt(s, d, cap):
        w = tableau_lweight(s, t)
        acc[w] = acc.get(w, 0) + 1
    return QChar(s, acc)


def highest_tableau(s: ParitySeq, d: SkewDiagram) -> STableau | None:
    """The entrywise-minimal tableau (first in enumeration order)."""
    return next(iter_ssyt(s, d), None)


@lru_cache(maxsize=None)
def _syt(parts: tuple[int, ...]) -> int:
    if sum(parts) <= 1:
        return 1
    total = 0
    for r in range(len(parts)):
        nxt = parts[r + 1] if r + 1 < len(parts) else 0
        if parts[r] > nxt:  # removable corner in row r
            shrunk = list(parts)
            shrunk[r] -= 1
            while shrunk and shrunk[-1] == 0:
                shrunk.pop()
            total += _syt(tuple(shrunk))
    return total


def count_syt(lam: Partition) -> int:
    """Standard Young tableaux of shape ``lam``, counted by removing the largest entry."""
    return _syt(lam.parts)
