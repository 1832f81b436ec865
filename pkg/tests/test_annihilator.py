"""Annihilator construction, classical b-functions, Bernstein-Sato ideal line."""

import pytest

from mbfun.annihilator import ann_fs, bernstein_sato, sabbah_line
from mbfun.bfunction import BFunction
from mbfun.errors import NotSpecializableError
from mbfun.parser import parse_poly
from mbfun.rationals import Q
from mbfun.sections import MeroContext, apply_operator, base_section
from mbfun.weyl import WeylElement


def one_like(F):
    from mbfun.multipoly import MultiPoly

    return MultiPoly.const(F.variables, 1)


@pytest.mark.parametrize("text", ["x", "x^2", "x*y", "x^2 + y^2", "x^2 + y^3"])
def test_ann_generators_kill_fs(text):
    F = parse_poly(text)
    ann = ann_fs([(F, "s")])
    assert ann.generators, "annihilator must not be empty"
    ctx = MeroContext(F, one_like(F))
    v = base_section(ctx, 0)
    for g in ann.generators:
        moved = WeylElement(
            ctx.sig,
            {tuple(e[ann.sig.index(n)] for n in ctx.sig.names): c for e, c in g.terms.items()},
        )
        assert apply_operator(moved, v).is_zero(), f"{g} does not annihilate f^s"


def test_ann_does_not_contain_f_itself():
    # x does NOT annihilate x^s; a correct annihilator never contains it
    F = parse_poly("x")
    ann = ann_fs([(F, "s")])
    ctx = MeroContext(F, one_like(F))
    x_op = WeylElement.gen(ctx.sig, "x")
    assert not apply_operator(x_op, base_section(ctx, 0)).is_zero()


@pytest.mark.parametrize(
    "text,expected",
    [
        ("x", {Q(-1): 1}),
        ("x^2", {Q(-1): 1, Q(-1, 2): 1}),
        ("x^3", {Q(-1): 1, Q(-2, 3): 1, Q(-1, 3): 1}),
        ("x*y", {Q(-1): 2}),
        ("x^2 + y^2", {Q(-1): 2}),
    ],
)
def test_classical_bfunction(text, expected):
    b = bernstein_sato(parse_poly(text))
    assert b.roots == expected


def test_classical_rejects_constants():
    with pytest.raises(ValueError):
        bernstein_sato(parse_poly("3", ("x",)))


def test_sabbah_line_separated_variables():
    res = sabbah_line(parse_poly("x", ("x", "y")), parse_poly("y", ("x", "y")), 0)
    assert str(res.b) == "(s + 1)^2"
    assert res.status == "CERTIFIED"
    assert res.witness is not None
    # the ideal element itself: (s1+1)(s2+1)
    assert str(res.bs_element) == "s1*s2 + s1 + s2 + 1"


def test_sabbah_line_is_multiple_of_mero_b():
    from mbfun.merobf import b_mero

    F, G = parse_poly("x^3", ("x", "y")), parse_poly("y^2", ("x", "y"))
    line = sabbah_line(F, G, 0)
    assert line.status == "CERTIFIED"
    mero = b_mero(F, G, 0)
    assert mero.b.divides(line.b)


def test_sabbah_requires_coprime_inputs():
    with pytest.raises(ValueError):
        sabbah_line(parse_poly("x"), parse_poly("x"), 0)
