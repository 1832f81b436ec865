"""Root combinatorics from normal-crossing chart data.

A chart records the multiplicities of F, G and the relative canonical
divisor along the coordinate hyperplanes after pulling back through a
log resolution.  From these the candidate-root set K_q, the bound set
B = K - Z_{>=0} and the monodromy eigenvalue classes are closed-form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .rationals import Q, format_ratio, parse_ratio


@dataclass(frozen=True)
class NCChart:
    label: str
    a: Tuple[int, ...]   # multiplicities of the numerator pullback
    b: Tuple[int, ...]   # multiplicities of the denominator pullback
    kappa: Tuple[int, ...]  # multiplicities of the relative canonical divisor

    def __post_init__(self):
        if not (len(self.a) == len(self.b) == len(self.kappa)):
            raise ValueError("chart vectors must have equal length")
        if any(v < 0 for vec in (self.a, self.b, self.kappa) for v in vec):
            raise ValueError("chart multiplicities must be nonnegative")
        if not any(self.a) and not any(self.b):
            raise ValueError("a and b must not both vanish")


@dataclass(frozen=True)
class BoundSet:
    """Finite residue set K; membership means r ∈ K - Z_{>=0}."""

    residues: frozenset

    def member(self, r) -> bool:
        return member(self, r)


def roots_nc(chart: NCChart, m: int) -> Set[Q]:
    """Candidate roots contributed by one chart at denominator order m.

    For each coordinate divisor with a_i > b_i the contribution is
    { (m b_i - k) / (a_i - b_i) : 1 <= k <= a_i - b_i }.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    out: Set[Q] = set()
    for ai, bi in zip(chart.a, chart.b):
        c = ai - bi
        if c <= 0:
            continue
        for k in range(1, c + 1):
            out.add(Q(m * bi - k, c))
    return out


def bound_set(charts: Sequence[NCChart], m: int) -> BoundSet:
    if not charts:
        raise ValueError("at least one chart is required")
    residues: Set[Q] = set()
    for chart in charts:
        residues |= roots_nc(chart, m)
    return BoundSet(frozenset(residues))


def member(B: BoundSet, r) -> bool:
    """True iff some residue q has q - r a nonnegative integer."""
    for q in B.residues:
        d = q - r
        if d >= 0 and d == int(d):
            return True
    return False


def eigenvalue_classes(roots: Iterable[Q]) -> Set[Q]:
    """Fractional parts in [0, 1); each class alpha stands for exp(2*pi*i*alpha)."""
    out: Set[Q] = set()
    for r in roots:
        out.add(r - Q(_floor(r)))
    return out


def _floor(r) -> int:
    n, d = int(r.numerator), int(r.denominator)
    return n // d


def check_lemma4(
    roots_small_m: Iterable[Q],
    roots_big_m: Iterable[Q],
    l_cap: int,
) -> Tuple[bool, Optional[int]]:
    """Smallest l <= l_cap with roots(small m) ⊆ ∪_{i=0..l} (roots(big m) - i).

    Failure on certified inputs indicates an engine bug, not a math fact.
    """
    small = set(roots_small_m)
    big = set(roots_big_m)
    for l in range(l_cap + 1):
        shifted = {r - Q(i) for r in big for i in range(l + 1)}
        if small <= shifted:
            return True, l
    return False, None


# -- chart JSON -----------------------------------------------------------


def charts_to_json(charts: Sequence[NCChart]) -> str:
    payload = {
        "charts": [
            {
                "label": c.label,
                "a": list(c.a),
                "b": list(c.b),
                "kappa": list(c.kappa),
            }
            for c in charts
        ]
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def charts_from_json(text: str) -> List[NCChart]:
    payload = json.loads(text)
    if not isinstance(payload, dict) or "charts" not in payload:
        raise ValueError('chart file must be an object with a "charts" list')
    out = []
    for entry in payload["charts"]:
        out.append(
            NCChart(
                label=str(entry["label"]),
                a=tuple(int(v) for v in entry["a"]),
                b=tuple(int(v) for v in entry["b"]),
                kappa=tuple(int(v) for v in entry["kappa"]),
            )
        )
    return out


def ratios_to_json(values: Iterable[Q]) -> List[str]:
    return [format_ratio(v) for v in sorted(values)]


def ratios_from_json(values: Iterable[str]) -> List[Q]:
    return [parse_ratio(v) for v in values]
