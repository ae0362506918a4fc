"""Exact computations on moment polygons of toric surfaces.

Rational inputs may be ints, strings "p/q" or fractions.Fraction; rational
outputs are fractions.Fraction. Quantities of the form c * pi^n come back as
PiScaled(c, n).
"""

from fractions import Fraction
from typing import NamedTuple

from . import _core
from ._core import DomainError, Family, ParseError, Polygon

__all__ = [
    "DomainError", "Family", "ParseError", "PiScaled", "Polygon",
    "polygon", "parse_polygon", "cp2", "p1xp1", "hirzebruch", "two_point_blowup",
    "blow_up", "scale", "apply_map", "is_delzant", "vertices",
    "measures", "monomial_moment", "virtual_action", "futaki_vector", "futaki_norm_sq",
    "calabi_lower_bound", "weyl_lower_bound", "topology",
    "hirzebruch_closed_form", "two_point_closed_form", "symmetric_two_point_closed_form",
    "family_eval", "scan", "minimize",
]


class PiScaled(NamedTuple):
    coefficient: Fraction
    pi_power: int

    def __float__(self):
        import math
        return float(self.coefficient) * math.pi ** self.pi_power


def _s(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _f(s):
    return Fraction(s)


def _pi(t):
    return PiScaled(Fraction(t[0]), t[1])


def _pt(p):
    return (Fraction(p[0]), Fraction(p[1]))


def polygon(points):
    return _core.build_polygon([(_s(x), _s(y)) for x, y in points])


parse_polygon = _core.parse_polygon


def cp2(a):
    return _core.gen_cp2(_s(a))


def p1xp1(a, b):
    return _core.gen_p1xp1(_s(a), _s(b))


def hirzebruch(k, alpha):
    return _core.gen_hirzebruch(int(k), _s(alpha))


def two_point_blowup(alpha, beta):
    return _core.gen_two_point_blowup(_s(alpha), _s(beta))


def blow_up(p, vertex, eps):
    return _core.blow_up(p, vertex, _s(eps))


def scale(p, c):
    return _core.scale(p, _s(c))


def apply_map(p, matrix, translation=(0, 0)):
    (a, b), (c, d) = matrix
    return _core.apply_map(p, a, b, c, d, _s(translation[0]), _s(translation[1]))


def vertices(p):
    return [_pt(v) for v in p.vertices()]


def is_delzant(p):
    ok, bad = _core.is_delzant(p)
    return ok, [(i, _pt(v), int(det)) for i, v, det in bad]


def measures(p):
    m = _core.measures(p)
    return {
        "area": _f(m["area"]),
        "perimeter": _f(m["perimeter"]),
        "interior_barycenter": _pt(m["interior_barycenter"]),
        "boundary_barycenter": _pt(m["boundary_barycenter"]),
        "displacement": _pt(m["displacement"]),
        "inertia": tuple(_f(x) for x in m["inertia"]),
        "quad_form": _f(m["quad_form"]),
    }


def monomial_moment(p, i, j):
    return _f(_core.monomial_moment(p, i, j))


def virtual_action(p):
    return _f(_core.virtual_action(p))


def futaki_vector(p):
    a, b = _core.futaki_vector(p)
    return _pi(a), _pi(b)


def futaki_norm_sq(p):
    return _pi(_core.futaki_norm_sq(p))


def calabi_lower_bound(p):
    return _pi(_core.calabi_lower_bound(p))


def weyl_lower_bound(p):
    return _pi(_core.weyl_lower_bound(p))


def topology(p):
    euler, signature, b2 = _core.topology(p)
    return {"euler": euler, "signature": signature, "b2": b2}


def hirzebruch_closed_form(k, alpha):
    return _f(_core.hirzebruch_closed_form(int(k), _s(alpha)))


def two_point_closed_form(alpha, beta):
    return _f(_core.two_point_closed_form(_s(alpha), _s(beta)))


def symmetric_two_point_closed_form(alpha):
    return _f(_core.symmetric_two_point_closed_form(_s(alpha)))


def family_eval(family, params):
    return _f(family.eval([_s(x) for x in params]))


def scan(family, axes, threads=0):
    rows = _core.scan(family, [[_s(x) for x in axis] for axis in axes], threads)
    return [([_f(x) for x in params], _f(a)) for params, a in rows]


def minimize(family, bracket=None, init=None, box=None, tol=1e-10):
    if init is None:
        lo, hi = bracket if bracket is not None else (1e-3, 20.0)
        out = _core.minimize(family, lo, hi, tol)
    else:
        out = _core.minimize_box(family, list(init), [list(b) for b in box], tol)
    out["witness"] = [_f(x) for x in out["witness"]]
    out["action_at_witness"] = _f(out["action_at_witness"])
    return out
