"""PBW algebras with normally ordered elements.

Supported signatures: Weyl algebras D_n (pairs [d_i, x_i] = 1), optional
central variables (s-parameters), the s,t-algebra twist [t, s] = t, and the
degree homogenization used for weight-vector Groebner runs ([d, x] = h^2).

Generators are numbered coords-then-derivations; a monomial is the exponent
vector of its normally ordered form (all coords left of all derivations).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .multipoly import MultiPoly, _revlex_key
from .rationals import ONE, Q, ZERO

Exponent = Tuple[int, ...]


class SignatureMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraSignature:
    coords: Tuple[str, ...]
    derivs: Tuple[str, ...]
    pairs: Tuple[Tuple[int, int], ...]      # (coord position, deriv position)
    twists: Tuple[Tuple[int, int], ...]     # (s position, t position), [t, s] = t
    homog: Optional[int] = None             # coord position of h, if homogenized

    @classmethod
    def make(
        cls,
        pairs: Sequence[Tuple[str, str]] = (),
        central: Sequence[str] = (),
        twists: Sequence[Tuple[str, str]] = (),
    ) -> "AlgebraSignature":
        coords = tuple(x for x, _ in pairs) + tuple(central)
        derivs = tuple(d for _, d in pairs)
        n = len(coords)
        pair_pos = tuple((i, n + i) for i in range(len(pairs)))
        twist_pos = []
        for t_name, s_name in twists:
            s_i, t_i = coords.index(s_name), coords.index(t_name)
            if s_i > t_i:
                raise ValueError("twist s-variable must precede its t-variable")
            if any(c == t_i for c, _ in pair_pos):
                raise ValueError("twisted t-variable cannot carry a derivation")
            twist_pos.append((s_i, t_i))
        return cls(coords, derivs, pair_pos, tuple(twist_pos))

    @property
    def names(self) -> Tuple[str, ...]:
        return self.coords + self.derivs

    @property
    def ngens(self) -> int:
        return len(self.coords) + len(self.derivs)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def homogenized(self, h_name: str = "h_") -> "AlgebraSignature":
        if self.twists:
            raise ValueError("homogenization of twisted algebras unsupported")
        coords = self.coords + (h_name,)
        n = len(coords)
        pairs = tuple((c, d + 1) for c, d in self.pairs)
        return AlgebraSignature(coords, self.derivs, pairs, (), homog=n - 1)


def _mono_product(sig: AlgebraSignature, e1: Exponent, e2: Exponent):
    """Expand the normally ordered product of two monomials.

    Yields (exponent, integer coefficient) pairs.
    """
    choices: List[Tuple[Dict[int, int], int]] = [({}, 1)]
    for ci, di in sig.pairs:
        b1, a2 = e1[di], e2[ci]
        if b1 and a2:
            expanded = []
            for delta, coeff in choices:
                for k in range(min(b1, a2) + 1):
                    c = math.comb(b1, k) * math.comb(a2, k) * math.factorial(k)
                    d2 = dict(delta)
                    d2[ci] = d2.get(ci, 0) - k
                    d2[di] = d2.get(di, 0) - k
                    if sig.homog is not None and k:
                        d2[sig.homog] = d2.get(sig.homog, 0) + 2 * k
                    expanded.append((d2, coeff * c))
            choices = expanded
    for si, ti in sig.twists:
        p1, q2 = e1[ti], e2[si]
        if p1 and q2:
            # t^p s^q = (s + p)^q t^p
            expanded = []
            for delta, coeff in choices:
                for j in range(q2 + 1):
                    c = math.comb(q2, j) * p1 ** (q2 - j)
                    d2 = dict(delta)
                    d2[si] = d2.get(si, 0) - (q2 - j)
                    expanded.append((d2, coeff * c))
            choices = expanded
    base = tuple(a + b for a, b in zip(e1, e2))
    for delta, coeff in choices:
        if delta:
            exps = list(base)
            for pos, shift in delta.items():
                exps[pos] += shift
            yield tuple(exps), coeff
        else:
            yield base, coeff


class WeylElement:
    """A finite rational combination of normally ordered monomials."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: AlgebraSignature, terms: Dict[Exponent, object]):
        self.sig = sig
        clean = {}
        for exps, coeff in terms.items():
            coeff = Q(coeff)
            if coeff != 0:
                clean[tuple(exps)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, sig: AlgebraSignature) -> "WeylElement":
        return cls(sig, {})

    @classmethod
    def const(cls, sig: AlgebraSignature, value) -> "WeylElement":
        return cls(sig, {(0,) * sig.ngens: Q(value)})

    @classmethod
    def gen(cls, sig: AlgebraSignature, name: str, power: int = 1) -> "WeylElement":
        exps = [0] * sig.ngens
        exps[sig.index(name)] = power
        return cls(sig, {tuple(exps): ONE})

    @classmethod
    def from_poly(cls, sig: AlgebraSignature, poly: MultiPoly) -> "WeylElement":
        positions = [sig.index(v) for v in poly.variables]
        terms = {}
        for exps, coeff in poly.terms.items():
            new = [0] * sig.ngens
            for pos, e in zip(positions, exps):
                new[pos] = e
            terms[tuple(new)] = coeff
        return cls(sig, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def _require_same(self, other: "WeylElement") -> None:
        if self.sig != other.sig:
            raise SignatureMismatch("operands live in different algebras")

    def __add__(self, other):
        if not isinstance(other, WeylElement):
            other = WeylElement.const(self.sig, other)
        self._require_same(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, ZERO) + coeff
            if acc == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = acc
        return WeylElement(self.sig, terms)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(self.sig, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, WeylElement):
            other = WeylElement.const(self.sig, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            scalar = Q(other)
            return WeylElement(self.sig, {e: c * scalar for e, c in self.terms.items()})
        self._require_same(other)
        terms: Dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                c12 = c1 * c2
                for exps, icoeff in _mono_product(self.sig, e1, e2):
                    acc = terms.get(exps, ZERO) + c12 * icoeff
                    if acc == 0:
                        terms.pop(exps, None)
                    else:
                        terms[exps] = acc
        return WeylElement(self.sig, terms)

    def __rmul__(self, other):
        # scalars only; element order matters otherwise
        scalar = Q(other)
        return WeylElement(self.sig, {e: c * scalar for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __hash__(self):
        return hash((self.sig, tuple(sorted(self.terms.items()))))

    def commutator(self, other: "WeylElement") -> "WeylElement":
        return self * other - other * self

    def content_primitive(self) -> "WeylElement":
        """Remove rational content; integer, primitive, deterministic sign."""
        if not self.terms:
            return self
        from math import gcd

        g, l = 0, 1
        for c in self.terms.values():
            g = gcd(g, abs(int(c.numerator)))
            d = int(c.denominator)
            l = l * d // gcd(l, d)
        factor = Q(l, g)
        lead = max(self.terms, key=_revlex_key)
        if self.terms[lead] < 0:
            factor = -factor
        return WeylElement(self.sig, {e: c * factor for e, c in self.terms.items()})

    def coord_part_poly(self) -> MultiPoly:
        """View as a commutative polynomial in the coords (no derivations allowed)."""
        nc = len(self.sig.coords)
        terms = {}
        for exps, coeff in self.terms.items():
            if any(exps[nc:]):
                raise ValueError("element involves derivations")
            terms[exps[:nc]] = coeff
        return MultiPoly(self.sig.coords, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.sig.names
        parts = []
        for exps, coeff in sorted(self.terms.items(), key=lambda t: _revlex_key(t[0]), reverse=True):
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                chunk = f"{coeff}"
            elif coeff == 1:
                chunk = body
            elif coeff == -1:
                chunk = f"-{body}"
            else:
                chunk = f"{coeff}*{body}"
            parts.append(chunk)
        out = parts[0]
        for chunk in parts[1:]:
            out += f" - {chunk[1:]}" if chunk.startswith("-") else f" + {chunk}"
        return out

    def __repr__(self) -> str:
        return f"WeylElement({self})"


def normal_order(a: WeylElement, b: WeylElement) -> WeylElement:
    """The normally ordered product a * b."""
    return a * b


# -- monomial orders ----------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """degrevlex | lex | weight vector with degrevlex tiebreak."""

    kind: str = "degrevlex"
    weights: Tuple[int, ...] = ()

    @classmethod
    def degrevlex(cls) -> "MonomialOrder":
        return cls("degrevlex")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def weight(cls, sig: AlgebraSignature, table: Dict[str, int]) -> "MonomialOrder":
        w = tuple(table.get(name, 0) for name in sig.names)
        order = cls("weight", w)
        order.check_admissible(sig)
        return order

    def check_admissible(self, sig: AlgebraSignature) -> None:
        if self.kind != "weight":
            return
        w = self.weights
        if len(w) != sig.ngens:
            raise ValueError("weight vector length mismatch")
        for ci, di in sig.pairs:
            if w[ci] + w[di] < 0:
                raise ValueError(
                    f"inadmissible weight: u({sig.names[ci]}) + u({sig.names[di]}) < 0"
                )

    def has_negative_weight(self) -> bool:
        return self.kind == "weight" and any(w < 0 for w in self.weights)

    def wdeg(self, exps: Exponent) -> int:
        if self.kind != "weight":
            return 0
        return sum(w * e for w, e in zip(self.weights, exps))

    def key(self, exps: Exponent):
        if self.kind == "lex":
            return tuple(exps)
        if self.kind == "weight":
            return (self.wdeg(exps),) + _revlex_key(exps)
        return _revlex_key(exps)

    def extended(self, sig_h: AlgebraSignature) -> "MonomialOrder":
        """Lift to the homogenized signature (h gets weight 0)."""
        if self.kind != "weight":
            return self
        nc = len(sig_h.coords)
        w = self.weights[: nc - 1] + (0,) + self.weights[nc - 1 :]
        return MonomialOrder("weight", w)
