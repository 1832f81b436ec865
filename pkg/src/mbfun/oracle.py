"""Brute-force functional-equation oracle.

Independent of the V-filtration engine: a candidate b(s) is checked by
searching for explicit operators P_k(s) with

    b(s) (f^s / G^m) = sum_{k=1}^{N} P_k(s) (f^{s+k} / G^m)

inside the Laurent module, as an exact rational linear system in the
unknown coefficients of the P_k.  Success yields a concrete witness, which
is re-verified by applying it; the same machinery also finds the minimal
monic b admitting such an equation against a prescribed list of target
sections (the one-term variant and the reduced equation are both of that
shape).

When (F, G) are jointly quasi-homogeneous the system splits into weight
blocks and columns of the wrong weight are discarded before solving; this
preserves solvability in both directions because every column is
weight-homogeneous in x.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import linalg
from .bfunction import BFunction, S_VAR
from .multipoly import MultiPoly, unify
from .rationals import ONE, Q, ZERO
from .sections import LaurentSection, MeroContext, _apply_dx, base_section
from .weyl import WeylElement

DEFAULT_N = 3
DEFAULT_DEG = 6

OpKey = Tuple[Tuple[int, ...], int, Tuple[int, ...]]   # (alpha, s-power, beta)


# -- quasi-homogeneity lattice -------------------------------------------


def weight_lattice(F: MultiPoly, G: MultiPoly) -> List[Tuple[Tuple, object, object]]:
    """Basis of rational weight vectors w making F and G both w-homogeneous.

    Returns triples (w, d1, d2) with e.w = d1 on supp F and e.w = d2 on
    supp G; empty when only w = 0 qualifies.
    """
    n = len(F.variables)
    rows = []
    for poly, dcol in ((F, n), (G, n + 1)):
        for exps in poly.terms:
            row = {i: Q(e) for i, e in enumerate(exps) if e}
            row[dcol] = Q(-1)
            rows.append(row)
    out = []
    for vec in linalg.nullspace(rows, n + 2):
        w = tuple(vec[:n])
        if any(c != 0 for c in w):
            out.append((w, vec[n], vec[n + 1]))
    return out


def _numerator_weight(poly: MultiPoly, w: Sequence, nx: int):
    """x-weight of a w-homogeneous polynomial; None when mixed."""
    seen = None
    for exps in poly.terms:
        val = ZERO
        for wi, e in zip(w, exps[:nx]):
            if e:
                val = val + wi * e
        if seen is None:
            seen = val
        elif seen != val:
            return None
    return seen


# -- column generation ----------------------------------------------------


def _compositions(k: int, total: int) -> Iterator[Tuple[int, ...]]:
    if k == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(k - 1, total - head):
            yield (head,) + rest


def _derivative_tower(base: LaurentSection, deg: int) -> Dict[Tuple[int, ...], LaurentSection]:
    """All sections d^beta(base) for |beta| <= deg, built incrementally."""
    ctx = base.ctx
    n = len(ctx.xvars)
    tower = {(0,) * n: base}
    for d in range(1, deg + 1):
        for beta in _compositions(n, d):
            i = next(idx for idx, e in enumerate(beta) if e)
            prev = tuple(e - (1 if idx == i else 0) for idx, e in enumerate(beta))
            tower[beta] = _apply_dx(tower[prev], ctx.xvars[i])
    return tower


def _operator_columns(
    base: LaurentSection, deg: int, sdeg: int
) -> Iterator[Tuple[OpKey, LaurentSection]]:
    """Sections (x^alpha s^j d^beta) base with |alpha|+|beta| <= deg, j <= sdeg."""
    ctx = base.ctx
    n = len(ctx.xvars)
    tower = _derivative_tower(base, deg)
    for beta, dbase in sorted(tower.items()):
        room = deg - sum(beta)
        for da in range(room + 1):
            for alpha in _compositions(n, da):
                for j in range(sdeg + 1):
                    mono = MultiPoly(ctx.ring, {alpha + (j,): ONE})
                    yield (alpha, j, beta), dbase.scaled(mono)


def _witness_element(
    ctx: MeroContext, coeffs: Dict[OpKey, object]
) -> WeylElement:
    terms = {alpha + (j,) + beta: c for (alpha, j, beta), c in coeffs.items()}
    return WeylElement(ctx.sig, terms)


# -- system assembly and solve -------------------------------------------


def _solve_sections(
    rhs: LaurentSection,
    columns: List[Tuple[object, LaurentSection]],
    lattice: List[Tuple[Tuple, object, object]],
) -> Optional[Dict[object, object]]:
    """Solve sum_i c_i col_i = rhs exactly; returns nonzero coefficients."""
    ctx = rhs.ctx
    nx = len(ctx.xvars)
    rhs = rhs.renormalize()
    cols = [(label, sec.renormalize()) for label, sec in columns]
    a = max([rhs.fpow] + [sec.fpow for _, sec in cols])
    b = max([rhs.gpow] + [sec.gpow for _, sec in cols])
    rhs_num = rhs.cleared_numerator(a, b)
    cleared = [(label, sec.cleared_numerator(a, b)) for label, sec in cols]
    cleared = [(label, num) for label, num in cleared if not num.is_zero()]
    for w, _, _ in lattice:
        target = _numerator_weight(rhs_num, w, nx)
        if target is None:
            continue
        kept = []
        for label, num in cleared:
            weight = _numerator_weight(num, w, nx)
            if weight is None or weight == target:
                kept.append((label, num))
        cleared = kept
    equations: Dict[Tuple[int, ...], Dict[int, object]] = {}
    for idx, (_, num) in enumerate(cleared):
        for exps, coeff in num.terms.items():
            equations.setdefault(exps, {})[idx] = coeff
    for exps in rhs_num.terms:
        equations.setdefault(exps, {})
    rows, rhs_vec = [], []
    for exps in sorted(equations):
        rows.append(equations[exps])
        rhs_vec.append(rhs_num.terms.get(exps, ZERO))
    solution = linalg.solve(rows, rhs_vec, len(cleared))
    if solution is None:
        return None
    return {
        label: value
        for (label, _), value in zip(cleared, solution)
        if value != 0
    }


# -- public oracle entry points ------------------------------------------


def _context(F: MultiPoly, G: MultiPoly) -> MeroContext:
    F, G = unify(F, G)
    return MeroContext(F, G)


def verify_functional_equation(
    b: BFunction,
    F: MultiPoly,
    G: MultiPoly,
    m: int = 0,
    N: int = DEFAULT_N,
    deg: int = DEFAULT_DEG,
    sdeg: Optional[int] = None,
    incremental: bool = True,
    ctx: Optional[MeroContext] = None,
) -> Optional[Dict[int, WeylElement]]:
    """Witness {k: P_k} for b(s) f^s/G^m = sum_k P_k f^{s+k}/G^m, or None.

    With incremental=True the search grows the degree bound from 1 up to
    deg and stops at the first success (cheap certification); rejection
    claims should pass incremental=False so the full bounds are exercised.
    """
    if ctx is None:
        ctx = _context(F, G)
    if sdeg is None:
        sdeg = deg
    lattice = weight_lattice(ctx.F, ctx.G)
    lhs = base_section(ctx, m).scaled(b.poly.extend_to(ctx.ring))
    schedule = list(range(1, deg + 1)) if incremental else [deg]
    for d in schedule:
        columns: List[Tuple[object, LaurentSection]] = []
        for k in range(1, N + 1):
            base = base_section(ctx, m, shift=k).renormalize()
            for key, sec in _operator_columns(base, d, min(d, sdeg)):
                columns.append(((k, key), sec))
        solution = _solve_sections(lhs, columns, lattice)
        if solution is None:
            continue
        witness: Dict[int, Dict[OpKey, object]] = {}
        for (k, key), value in solution.items():
            witness.setdefault(k, {})[key] = value
        result = {k: _witness_element(ctx, coeffs) for k, coeffs in sorted(witness.items())}
        _recheck_witness(b, m, ctx, result)
        return result
    return None


def _recheck_witness(
    b: BFunction, m: int, ctx: MeroContext, witness: Dict[int, WeylElement]
) -> None:
    from .errors import CertificationError
    from .sections import apply_operator

    lhs = base_section(ctx, m).scaled(b.poly.extend_to(ctx.ring))
    total: Optional[LaurentSection] = None
    for k, P in witness.items():
        part = apply_operator(P, base_section(ctx, m, shift=k))
        total = part if total is None else total + part
    if total is None or not total.section_eq(lhs):
        raise CertificationError("witness failed independent re-application")


def reject_maximal_divisors(
    b: BFunction,
    F: MultiPoly,
    G: MultiPoly,
    m: int = 0,
    N: int = DEFAULT_N,
    deg: int = DEFAULT_DEG,
) -> bool:
    """True iff every b/(s-r) fails the functional equation at full bounds."""
    if b.roots is None:
        raise ValueError("minimality check needs a split b-function")
    s = MultiPoly.var((S_VAR,), S_VAR)
    for root, _ in b.sorted_roots():
        quotient = b.poly.exact_quotient(s - MultiPoly.const((S_VAR,), root))
        if quotient.is_constant():
            continue
        cand = BFunction.from_poly(quotient)
        if verify_functional_equation(cand, F, G, m, N, deg, incremental=False) is not None:
            return False
    return True


def minimize_by_oracle(
    b: BFunction,
    F: MultiPoly,
    G: MultiPoly,
    m: int = 0,
    N: int = DEFAULT_N,
    deg: int = DEFAULT_DEG,
) -> BFunction:
    """Smallest monic divisor of b (by dropping roots) passing the oracle.

    Any polynomial admitting the functional equation is a multiple of the
    true minimal one, so shrinking while the oracle still certifies can
    only move toward (never past) the answer.
    """
    if b.roots is None:
        return b
    s = MultiPoly.var((S_VAR,), S_VAR)
    changed = True
    while changed and b.degree() > 1:
        changed = False
        for root, _ in b.sorted_roots():
            quotient = b.poly.exact_quotient(s - MultiPoly.const((S_VAR,), root))
            if quotient.is_constant():
                continue
            cand = BFunction.from_poly(quotient)
            if verify_functional_equation(cand, F, G, m, N, deg, incremental=False) is not None:
                b = cand
                changed = True
                break
    return b


def prefactored_witness(
    b: BFunction,
    F: MultiPoly,
    G: MultiPoly,
    m: int,
    prefactor: MultiPoly,
    deg: int = DEFAULT_DEG,
    sdeg: Optional[int] = None,
) -> Optional[WeylElement]:
    """P with b(s) f^s/G^m = prefactor * P (f^{s+1}/G^m), or None."""
    ctx = _context(F, G)
    if sdeg is None:
        sdeg = deg
    lattice = weight_lattice(ctx.F, ctx.G)
    lhs = base_section(ctx, m).scaled(b.poly.extend_to(ctx.ring))
    pre = prefactor.extend_to(ctx.ring)
    base = base_section(ctx, m, shift=1).renormalize()
    columns = [
        (key, sec.scaled(pre)) for key, sec in _operator_columns(base, deg, sdeg)
    ]
    solution = _solve_sections(lhs, columns, lattice)
    if solution is None:
        return None
    return _witness_element(ctx, solution)


# -- minimal-b joint search ----------------------------------------------


def minimal_b_search(
    ctx: MeroContext,
    v0: LaurentSection,
    targets: Sequence[LaurentSection],
    opdeg: int,
    sdeg: int,
    max_bdeg: int,
    min_bdeg: int = 0,
) -> Optional[Tuple[BFunction, List[WeylElement]]]:
    """Minimal monic b with b(s) v0 = sum_r P_r target_r, bounded search.

    The b coefficients and the operator coefficients enter one joint
    linear system per candidate degree; degrees are tried in increasing
    order so the first hit has minimal degree within the operator bounds.
    Any solution is a multiple of the true minimal b for the equation.
    """
    lattice = weight_lattice(ctx.F, ctx.G)
    op_columns: List[Tuple[object, LaurentSection]] = []
    for r, target in enumerate(targets):
        for key, sec in _operator_columns(target.renormalize(), opdeg, sdeg):
            op_columns.append((("op", r, key), sec))
    for bdeg in range(min_bdeg, max_bdeg + 1):
        s_pow = MultiPoly(ctx.ring, {(0,) * len(ctx.xvars) + (bdeg,): ONE})
        rhs = v0.scaled(-s_pow)
        columns = [
            (("b", i), v0.scaled(MultiPoly(ctx.ring, {(0,) * len(ctx.xvars) + (i,): ONE})))
            for i in range(bdeg)
        ] + op_columns
        solution = _solve_sections(rhs, columns, lattice)
        if solution is None:
            continue
        b_terms = {(bdeg,): ONE}
        ops: List[Dict[OpKey, object]] = [dict() for _ in targets]
        for label, value in solution.items():
            if label[0] == "b":
                b_terms[(label[1],)] = value
            else:
                ops[label[1]][label[2]] = -value
        b = BFunction.from_poly(MultiPoly((S_VAR,), b_terms))
        return b, [_witness_element(ctx, coeffs) for coeffs in ops]
    return None
