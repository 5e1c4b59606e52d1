import pytest
from hypothesis import given, settings, strategies as st

from matrixf5.monomial import Monomial
from matrixf5.polynomial import ParseError, Polynomial, normal_form, parse

P7 = 65521


def test_parse_circles_f1(P, circles):
    f = P("x^2 + y^2 - 2*x*z - 2*y*z + z^2 + h^2")
    assert f == circles[0]
    assert f.coefficient((1, 0, 1, 0)) == P7 - 2
    assert len(f) == 6


def test_parse_zero_and_cancellation():
    assert parse("0", ["x1", "x2"]).is_zero()
    f = parse("7*x1^2 - 7*x1^2 + x2^2", ["x1", "x2"])
    assert f == Polynomial({(0, 2): 1}, 2)


def test_parse_implicit_and_powers():
    f = parse("2x*y^2 + 3*y^3 + x^3", ["x", "y"])
    assert f.coefficient((1, 2)) == 2
    assert f.coefficient((0, 3)) == 3
    assert f.coefficient((3, 0)) == 1


@pytest.mark.parametrize("bad", ["x^", "x - -y", "x + * y", "q^2", "x^2 +", "1/0"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad, ["x", "y"])


def test_leading_terms(P, circles):
    assert circles[1].leading_monomial() == (2, 0, 0, 0)
    g = P("2*y^3 - 7*x*y*z - 3*y^2*z - 2*x*z^2 - y*z^2 + 2*z^3 + 3*x*h^2 + 4*y*h^2 + 2*z*h^2")
    assert g.leading_term() == ((0, 3, 0, 0), 2)
    m = Polynomial.monomial((3, 0, 0, 0), 5)
    assert m.leading_term() == ((3, 0, 0, 0), 5)


def test_to_str_roundtrip(circles):
    for f in circles:
        assert parse(f.to_str(), f.names) == f
    assert circles[0].to_str() == "x^2 + y^2 - 2*x*z - 2*y*z + z^2 + h^2"


def test_arithmetic(P):
    f, g = P("x + y"), P("x - y")
    assert f * g == P("x^2 - y^2")
    assert (f + g) == P("2*x")
    assert (f - f).is_zero()
    assert f.scale(3) == P("3*x + 3*y")
    assert f.mul_term((0, 0, 1, 0), 2) == P("2*x*z + 2*y*z")
    assert P("3*x^2 + y^2").monic().leading_term()[1] == 1


def test_homogenize():
    f = parse("x^2 + y + 1", ["x", "y"])
    g = f.homogenize()
    assert g.names == ["x", "y", "h"]
    assert g.is_homogeneous()
    assert g == parse("x^2 + y*h + h^2", ["x", "y", "h"])


def test_substitute(P):
    f = P("x^2 - y")
    images = [P("y"), P("x"), P("z"), P("h")]
    assert f.substitute(images) == P("y^2 - x")


def test_vector_roundtrip(circles):
    f = circles[2]
    v = f.to_vector(2)
    assert v.shape == (10,)
    assert Polynomial.from_vector(v, 4, 2, f.field, f.names) == f


def test_normal_form_examples(P, circles):
    g = circles[0]
    assert normal_form(g, [g]).is_zero()
    assert normal_form(P("x^2*y"), [P("x^2")]).is_zero()
    from matrixf5.oracle import buchberger
    G = buchberger(circles)
    assert normal_form(circles[0] * circles[1], G).is_zero()
    assert not normal_form(P("h^3"), G).is_zero()


def test_mismatched_rings():
    with pytest.raises(ValueError):
        parse("x", ["x"], 7) + parse("x", ["x"], 11)


coeffs = st.integers(0, P7 - 1)
terms = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeffs, max_size=6)


@settings(max_examples=150, deadline=None)
@given(terms, terms, terms)
def test_ring_axioms(a, b, c):
    f, g, h = (Polynomial({Monomial(k): v for k, v in t.items()}, 2) for t in (a, b, c))
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f + g) - g == f
    if f and g:
        assert (f * g).leading_monomial() == f.leading_monomial() * g.leading_monomial()
