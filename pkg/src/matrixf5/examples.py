"""Small built-in systems used by the tests and the CLI docs."""

from __future__ import annotations

from .sysfile import parse_system

# a projective circle and two hyperbolas; (1,1,1,1) is a common zero
CIRCLES = """\
vars: x,y,z,h
p: 65521
x^2 + y^2 - 2*x*z - 2*y*z + z^2 + h^2
x^2 + x*y + y*z - z^2 - 2*h^2
x^2 - y^2 + 2*y*z - 2*z^2
"""


def circles(p: int | None = None):
    return parse_system(CIRCLES, p, "circles").polys
