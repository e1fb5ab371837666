"""JSON encoding of the library's values.

Rationals are strings (``"-1/2"``, ``"3"``); root multisets are sorted lists of
rational strings; dense polynomials are coefficient lists, lowest degree first.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bethe import BAESystem
from .lweight import LWeight, QChar, RatB
from .parity import ParitySeq, parse_parity
from .polycore import DensePoly, FactoredPoly, rational_str, to_rational


def rational_to_json(q: Fraction) -> str:
    return rational_str(q)


def rational_from_json(x: Any) -> Fraction:
    if isinstance(x, float):
        raise ValueError(f"refusing binary float {x!r}; write rationals as strings")
    return to_rational(x)


def factored_to_json(p: FactoredPoly) -> list[str]:
    return [rational_str(r) for r in p.roots]


def factored_from_json(x: list) -> FactoredPoly:
    return FactoredPoly(rational_from_json(r) for r in x)


def dense_to_json(p: DensePoly) -> list[str]:
    return [rational_str(c) for c in p.coeffs]


def dense_from_json(x: list) -> DensePoly:
    return DensePoly(rational_from_json(c) for c in x)


def lweight_components_to_json(z: LWeight) -> list[dict]:
    return [{"num": factored_to_json(c.num), "den": factored_to_json(c.den)} for c in z.components]


def lweight_to_json(z: LWeight) -> dict:
    return {"parity": str(z.parity), "lweight": lweight_components_to_json(z)}


def lweight_components_from_json(x: list, parity: ParitySeq) -> LWeight:
    comps = []
    for c in x:
        comps.append(RatB(factored_from_json(c.get("num", [])), factored_from_json(c.get("den", []))))
    return LWeight(comps, parity)


def lweight_from_json(x: Any, parity: ParitySeq | str | None = None) -> LWeight:
    """Accept ``{"parity", "lweight"}`` or a bare component array plus ``parity``."""
    if isinstance(x, dict):
        p = x.get("parity", parity)
        if p is None:
            raise ValueError("l-weight JSON has no parity")
        return lweight_components_from_json(x["lweight"], parse_parity(p))
    if parity is None:
        raise ValueError("a bare l-weight array needs an explicit parity")
    return lweight_components_from_json(x, parse_parity(parity))


def qchar_to_json(q: QChar) -> dict:
    out = {
        "parity": str(q.parity),
        "terms": [{"lweight": lweight_components_to_json(w), "mult": k} for w, k in q.items()],
    }
    if q.diagnostics:
        out["diagnostics"] = list(q.diagnostics)
    return out


def qchar_from_json(x: Any, parity: ParitySeq | str | None = None) -> QChar:
    if isinstance(x, dict):
        p = parse_parity(x.get("parity", parity))
        terms = x["terms"]
    else:
        if parity is None:
            raise ValueError("a bare q-character array needs an explicit parity")
        p, terms = parse_parity(parity), x
    return QChar(p, [(lweight_components_from_json(t["lweight"], p), int(t["mult"])) for t in terms])


def system_to_json(sys: BAESystem) -> dict:
    return {
        "parity": str(sys.parity),
        "zeta": lweight_components_to_json(sys.zeta),
        "y": [dense_to_json(p) for p in sys.y],
    }


def system_from_json(x: dict) -> BAESystem:
    p = parse_parity(x["parity"])
    zeta = x["zeta"]
    if isinstance(zeta, dict):
        zeta = zeta["lweight"]
    return BAESystem(p, lweight_components_from_json(zeta, p), tuple(dense_from_json(c) for c in x["y"]))


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=False)
