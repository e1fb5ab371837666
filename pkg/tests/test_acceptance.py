"""Acceptance run: one test per criterion, each printing a single PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
Instances come from fixed seeds, so the run is reproducible.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from collections import Counter
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from gen import GL11, distinct_roots, generic_factor, gl11_with_phi, rand_lweight, rand_parity, rand_system
from superyangian import LWeight, ParitySeq, QChar, RatB
from superyangian.bethe import bae_divisibility, fermionic_reproduce
from superyangian.diffop import compare_systems
from superyangian.lweight import finite_dim_check, lw_product, varpi
from superyangian.parity import Partition, all_parities, is_hook, kappa, partitions_of, weight_leq
from superyangian.qchar11 import qchar_dim, qchar_gl11, qchar_reflect_gl11
from superyangian.reflection import reflect
from superyangian.tableaux import (
    SkewDiagram,
    count_ssyt,
    count_syt,
    enumerate_ssyt,
    highest_tableau,
    iter_ssyt,
    skew_cells,
    tableau_lweight,
)


def report(number, title, check, limit=None):
    """Run ``check`` (returns (ok, detail)), print one line, then assert."""
    start = time.perf_counter()
    try:
        ok, detail = check()
    except Exception as exc:  # reported, then re-raised by the assert below
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok, detail = False, f"{detail}; took {elapsed:.2f}s, limit {limit}s"
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s)  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def maximal_terms(q: QChar) -> list[LWeight]:
    weights = {w: varpi(w) for w in q}
    return [w for w, v in weights.items() if all(weight_leq(u, v) for u in weights.values())]


# ---------------------------------------------------------------------------
# shared instances
# ---------------------------------------------------------------------------

PARITIES_UP_TO_5 = [ParitySeq(p) for size in range(1, 6) for p in itertools.product((1, -1), repeat=size)]

# large shapes up to 12 cells on top of every skew shape with at most 3 cells
CURATED_SHAPES = [
    ((5, 3, 3, 3, 3), (3, 3, 2, 2)),
    ((3, 3, 3, 3), (1,)),
    ((4, 4, 4), ()),
    ((6, 6), ()),
    ((2, 2, 2, 2, 2, 2), ()),
    ((12,), ()),
    ((1,) * 12, ()),
    ((6, 5, 4, 3), (5, 4, 3, 2)),
    ((3, 2), (1,)),
    ((4, 3, 2, 1), ()),
    ((5, 4, 3), (2, 1)),
    ((4, 4, 2, 2), (2, 2)),
    ((7, 5), (3,)),
    ((3, 3, 3), (2, 1)),
]


def small_skew_shapes(max_cells):
    """Skew shapes with no empty rows and a non-empty first column."""
    out = []
    for size in range(1, 2 * max_cells + 1):
        for lam in partitions_of(size):
            for inner_size in range(max(0, size - max_cells), size):
                for mu in partitions_of(inner_size):
                    if len(mu) >= len(lam) or any(mu[r] >= lam[r] for r in range(1, len(mu) + 1)):
                        continue
                    out.append((lam.parts, mu.parts))
    return out


def criterion4_shapes():
    return [SkewDiagram(Partition(o), Partition(i)) for o, i in small_skew_shapes(3) + CURATED_SHAPES]


def gl11_pairs(rng):
    return [rand_system(rng, GL11, maxdeg=3) for _ in range(50)]


def glmn_pairs(rng):
    return [rand_system(rng, rand_parity(rng, max_size=4), maxdeg=2) for _ in range(20)]


_SYSTEMS = []


def reproduction_pairs():
    if not _SYSTEMS:
        rng = random.Random(8)
        for sys_, i in gl11_pairs(rng) + glmn_pairs(rng):
            _SYSTEMS.append((sys_, i, fermionic_reproduce(sys_, i)))
    return _SYSTEMS


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


def test_c01_dimension_power_of_two():
    def check():
        rng = random.Random(1)
        ks = [rng.randint(0, 8) for _ in range(50)]
        ks[:9] = range(9)
        bad = []
        for k in ks:
            z = gl11_with_phi(rng, distinct_roots(rng, k), s=rng.choice([GL11, ParitySeq.parse("-+")]))
            if qchar_dim(qchar_gl11(z)) != 2**k:
                bad.append(k)
        return not bad, f"50 weights, k in 0..8, mismatches {bad}"

    report(1, "gl(1|1) dimension 2^k", check, limit=1.0)


def test_c02_reflection_involution():
    def check():
        rng = random.Random(2)
        bad = 0
        for _ in range(100):
            s = rand_parity(rng, max_size=6)
            z = rand_lweight(rng, s)
            i = rng.choice(s.odd_nodes())
            bad += reflect(reflect(z, i), i) != z
        return bad == 0, f"100 weights, {bad} failures"

    report(2, "reflect twice is the identity", check, limit=1.0)


def test_c03_qchar_reflection_top_term():
    def check():
        rng = random.Random(3)
        bad = []
        for trial in range(30):
            residues = rng.sample([Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4)],
                                  rng.randint(1, 3))
            factors = [generic_factor(rng, rng.randint(0, 3), r) for r in residues]
            q = QChar.single(LWeight.unit(GL11))
            for z in factors:
                q = q * qchar_gl11(z)
            out = qchar_reflect_gl11(q)
            top_in, top_out = maximal_terms(q), maximal_terms(out)
            ok = (out.dim() == q.dim() and len(top_in) == 1 and top_out == [reflect(top_in[0], 1)])
            if not ok:
                bad.append(trial)
        return not bad, f"30 products of up to 3 factors, failing trials {bad}"

    report(3, "q-character reflection agrees with reflect on the top term", check, limit=5.0)


def test_c04_parity_independence():
    def check():
        shapes = criterion4_shapes()
        bad = []
        for d in shapes:
            by_rank: dict[tuple[int, int], set[int]] = {}
            for s in PARITIES_UP_TO_5:
                by_rank.setdefault((s.m, s.n), set()).add(count_ssyt(s, d))
            bad += [(str(d), mn) for mn, counts in by_rank.items() if len(counts) != 1]
        return not bad, f"{len(shapes)} shapes x {len(PARITIES_UP_TO_5)} parities, disagreements {bad[:3]}"

    report(4, "tableau counts independent of parity", check, limit=10.0)


def central_exponents(s, kap, w):
    """Net root exponents of prod_p w_p(u - kappa_p)^(s_p), roots as (num, den) pairs."""
    out = Counter()
    for p, k in enumerate(kap, start=1):
        sign = s[p]
        for r in w[p].num.roots:
            out[r.numerator + k * r.denominator, r.denominator] += sign
        for r in w[p].den.roots:
            out[r.numerator + k * r.denominator, r.denominator] -= sign
    return {r: e for r, e in out.items() if e}


def content_exponents(d):
    out = Counter()
    for _, _, c in skew_cells(d):
        out[-c - 1, 1] += 1
        out[-c, 1] -= 1
    return {r: e for r, e in out.items() if e}


_WEIGHT_STATS = {}


def tableau_weight_scan():
    """Central identity and distinctness over every tableau of criterion 4."""
    if not _WEIGHT_STATS:
        central_bad, thin_bad, total = [], [], 0
        for d in criterion4_shapes():
            target = content_exponents(d)
            for s in PARITIES_UP_TO_5:
                kap = kappa(s)
                seen = set()
                for t in iter_ssyt(s, d):
                    w = tableau_lweight(s, t)
                    total += 1
                    if w in seen:
                        thin_bad.append((str(d), str(s)))
                    seen.add(w)
                    if central_exponents(s, kap, w) != target:
                        central_bad.append((str(d), str(s), t.entries))
        _WEIGHT_STATS.update(central=central_bad, thin=thin_bad, total=total)
    return _WEIGHT_STATS


def test_c05_central_identity():
    def check():
        st = tableau_weight_scan()
        return not st["central"], f"{st['total']} tableaux, failures {st['central'][:3]}"

    report(5, "central series identity on every tableau", check)


def test_c06_thinness():
    def check():
        st = tableau_weight_scan()
        return not st["thin"], f"{st['total']} tableaux, repeated weights {st['thin'][:3]}"

    report(6, "tableau l-weights pairwise distinct", check)


def test_c07_worked_tableau():
    def check():
        d = SkewDiagram(Partition((5, 3, 3, 3, 3)), Partition((3, 3, 2, 2)))
        want = {(1, 4): 1, (1, 5): 1, (3, 3): 2, (4, 3): 2, (5, 1): 2, (5, 2): 3, (5, 3): 4}
        present = any(t.as_dict() == want for t in enumerate_ssyt(ParitySeq((1, -1, 1, -1)), d))
        contents = sorted(c for _, _, c in skew_cells(d))
        ok = present and contents == sorted([3, 4, 0, -1, -4, -3, -2])
        return ok, f"filling enumerated: {present}, contents {contents}"

    report(7, "worked tableau and its contents", check)


def test_c08_reproduction_round_trip():
    def check():
        _SYSTEMS.clear()
        bad = 0
        for sys_, i, out in reproduction_pairs():
            bad += not bae_divisibility(out, i) or fermionic_reproduce(out, i) != sys_
        return bad == 0, f"{len(_SYSTEMS)} systems (50 gl(1|1), 20 gl(m|n)), {bad} failures"

    report(8, "fermionic reproduction round trip", check, limit=5.0)


def test_c09_operator_identity():
    pairs = reproduction_pairs()

    def check():
        bad = []
        for n, (sys_, _, out) in enumerate(pairs):
            if not (compare_systems(sys_, out, 8).equal and compare_systems(sys_, out, 12).equal):
                bad.append(n)
        return not bad, f"{len(pairs)} pairs at R=8 and R=12, failing {bad}"

    report(9, "difference operators agree before and after reproduction", check, limit=30.0)


def test_c10_dimension_count():
    def check():
        bad = []
        for m, n, top in ((1, 1, 6), (2, 1, 5), (2, 2, 4)):
            for s in all_parities(m, n):
                for l in range(top + 1):
                    total = 0
                    for lam in partitions_of(l):
                        if is_hook(lam, m, n):
                            d = SkewDiagram(lam, Partition(()))
                            total += count_ssyt(s, d) * count_syt(lam)
                    if total != (m + n) ** l:
                        bad.append((str(s), l, total))
        return not bad, f"mismatches {bad[:3]}"

    report(10, "sum of |SSYT|*|SYT| is (m+n)^l", check, limit=10.0)


def test_c11_finiteness():
    def check():
        rng = random.Random(11)
        positives = []
        for m, n in ((2, 0), (3, 0), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1)):
            s = ParitySeq.standard(m, n)
            tops = []
            for outer, inner in small_skew_shapes(3) + CURATED_SHAPES[:10]:
                t = highest_tableau(s, SkewDiagram(Partition(outer), Partition(inner)))
                if t is not None:
                    tops.append(tableau_lweight(s, t))
            for _ in range(6):
                positives.append(lw_product(rng.sample(tops, rng.randint(1, min(3, len(tops)))), s))
        negatives = []
        s = ParitySeq.standard(2, 0)
        for a in (Fraction(k, 2) for k in range(-6, 7)):
            negatives.append(LWeight([RatB.from_roots([a + 1], [a]), RatB()], s))
            common = RatB.from_roots([a + 3], [a - 2])
            negatives.append(LWeight([RatB.from_roots([a + 1], [a]) * common, common], s))
        false_neg = sum(not finite_dim_check(z) for z in positives)
        false_pos = sum(finite_dim_check(z) for z in negatives)
        ok = false_neg == 0 and false_pos == 0
        return ok, f"{len(positives)} products true ({false_neg} wrong), {len(negatives)} counterexamples ({false_pos} wrong)"

    report(11, "finiteness criterion", check)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
