"""Parity sequences, partitions and gl(m|n) weights.

Indexing is 1-based throughout to match the usual conventions: *nodes*
(simple roots) run over ``1..m+n-1`` and *positions* (basis vectors
``eps_j``) over ``1..m+n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, NewType, Sequence

from .errors import NotHook, SameParity
from .polycore import rational_str, to_rational

Node = NewType("Node", int)
Position = NewType("Position", int)


@dataclass(frozen=True)
class ParitySeq:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if not entries:
            raise ValueError("a parity sequence needs at least one entry")
        if any(x not in (1, -1) for x in entries):
            raise ValueError(f"parity entries must be +1 or -1, got {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "ParitySeq":
        """Parse ``"+--+"`` (ASCII or unicode minus)."""
        out = []
        for ch in text.strip():
            if ch == "+":
                out.append(1)
            elif ch in "-−":
                out.append(-1)
            elif ch in " ,":
                continue
            else:
                raise ValueError(f"bad parity character {ch!r} in {text!r}")
        return cls(tuple(out))

    @classmethod
    def standard(cls, m: int, n: int) -> "ParitySeq":
        return cls((1,) * m + (-1,) * n)

    @property
    def m(self) -> int:
        return self.entries.count(1)

    @property
    def n(self) -> int:
        return self.entries.count(-1)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        """1-based access: ``s[i]`` is ``s_i``."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(f"position {i} out of range 1..{len(self.entries)}")
        return self.entries[i - 1]

    def __str__(self) -> str:
        return "".join("+" if x == 1 else "-" for x in self.entries)

    def is_standard(self) -> bool:
        return self == ParitySeq.standard(self.m, self.n)

    def odd_nodes(self) -> list[Node]:
        e = self.entries
        return [Node(i + 1) for i in range(len(e) - 1) if e[i] != e[i + 1]]


def all_parities(m: int, n: int) -> Iterator[ParitySeq]:
    """Every sequence in S_{m|n}, in lexicographic order of the + positions."""
    size = m + n
    for plus in combinations(range(size), m):
        s = [-1] * size
        for p in plus:
            s[p] = 1
        yield ParitySeq(tuple(s))


def swap_at(s: ParitySeq, i: Node) -> ParitySeq:
    if not 1 <= i <= len(s) - 1:
        raise IndexError(f"node {i} out of range 1..{len(s) - 1}")
    if s[i] == s[i + 1]:
        raise SameParity(f"s_{i} = s_{i + 1} in {s}; no odd reflection at node {i}")
    e = list(s.entries)
    e[i - 1], e[i] = e[i], e[i - 1]
    return ParitySeq(tuple(e))


def kappa(s: ParitySeq) -> tuple[int, ...]:
    e = s.entries
    out = [0 if e[0] == 1 else -1]
    for i in range(1, len(e)):
        out.append(out[-1] + (e[i] if e[i] == e[i - 1] else 0))
    return tuple(out)


def alpha_pair(s: ParitySeq, i: Node, j: Position) -> int:
    """Bilinear form ``(alpha_i, eps_j) = s_i delta_ij - s_{i+1} delta_{i+1,j}``."""
    if not 1 <= i <= len(s) - 1:
        raise IndexError(f"node {i} out of range")
    if j == i:
        return s[i]
    if j == i + 1:
        return -s[i + 1]
    return 0


@dataclass(frozen=True, order=True)
class Letter:
    """Alphabet element: unbarred ``k`` or barred ``k̄``."""

    index: int
    barred: bool = False

    def __str__(self):
        return f"{self.index}̄" if self.barred else str(self.index)


def alphabet_order(s: ParitySeq) -> tuple[Letter, ...]:
    plain = barred = 0
    out = []
    for x in s.entries:
        if x == 1:
            plain += 1
            out.append(Letter(plain))
        else:
            barred += 1
            out.append(Letter(barred, True))
    return tuple(out)


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = [int(x) for x in self.parts]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        object.__setattr__(self, "parts", tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text or text in ("0", "()", "[]"):
            return cls(())
        return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))

    def __getitem__(self, i: int) -> int:
        """1-based, zero beyond the length."""
        if i < 1:
            raise IndexError("partition rows are 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def __str__(self):
        return ",".join(map(str, self.parts))


def partitions_of(l: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``l``, reverse-lexicographic."""
    if max_part is None:
        max_part = l
    if l == 0:
        yield Partition(())
        return
    for first in range(min(l, max_part), 0, -1):
        for rest in partitions_of(l - first, first):
            yield Partition((first,) + rest.parts)


def is_hook(lam: Partition, m: int, n: int) -> bool:
    return lam[m + 1] <= n


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GlWeight:
    """Coordinates in the eps-basis."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(to_rational(c) for c in self.coords))

    @classmethod
    def zero(cls, size: int) -> "GlWeight":
        return cls((Fraction(0),) * size)

    @classmethod
    def eps(cls, size: int, j: Position) -> "GlWeight":
        c = [Fraction(0)] * size
        c[j - 1] = Fraction(1)
        return cls(tuple(c))

    @classmethod
    def alpha(cls, size: int, i: Node) -> "GlWeight":
        c = [Fraction(0)] * size
        c[i - 1] = Fraction(1)
        c[i] = Fraction(-1)
        return cls(tuple(c))

    def __len__(self):
        return len(self.coords)

    def __add__(self, other: "GlWeight") -> "GlWeight":
        return GlWeight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "GlWeight") -> "GlWeight":
        return GlWeight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def scale(self, k) -> "GlWeight":
        return GlWeight(tuple(k * a for a in self.coords))

    def swapped(self, i: Node) -> "GlWeight":
        c = list(self.coords)
        c[i - 1], c[i] = c[i], c[i - 1]
        return GlWeight(tuple(c))

    def __str__(self):
        return "(" + ", ".join(rational_str(c) for c in self.coords) + ")"


def hook_weight(s: ParitySeq, lam: Partition) -> GlWeight:
    """The gl(m|n)-highest weight ``lam^s`` attached to a hook partition."""
    m, n = s.m, s.n
    if not is_hook(lam, m, n):
        raise NotHook(f"{lam} is not an ({m}|{n})-hook partition")
    conj = lam.conjugate()
    coords = [Fraction(0)] * len(s)
    plus_seen = minus_seen = 0
    for pos, x in enumerate(s.entries, start=1):
        if x == 1:
            plus_seen += 1
            a_i = minus_seen  # number of -1 before the i-th +1
            coords[pos - 1] += max(lam[plus_seen] - a_i, 0)
        else:
            minus_seen += 1
            b_j = plus_seen
            coords[pos - 1] += max(conj[minus_seen] - b_j, 0)
    return GlWeight(tuple(coords))


def weight_leq(nu: GlWeight, mu: GlWeight) -> bool:
    """``nu <= mu``: ``mu - nu`` is a non-negative integer combination of simple roots."""
    if len(nu) != len(mu):
        raise ValueError("weights of different rank")
    partial = Fraction(0)
    for a, b in zip(mu.coords, nu.coords):
        partial += a - b
        if partial < 0 or partial.denominator != 1:
            return False
    return partial == 0


def parse_parity(x: "ParitySeq | str | Sequence[int]") -> ParitySeq:
    if isinstance(x, ParitySeq):
        return x
    if isinstance(x, str):
        return ParitySeq.parse(x)
    return ParitySeq(tuple(x))


def parse_partition(x: "Partition | str | Iterable[int]") -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.parse(x)
    return Partition(tuple(x))
