import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mindoc import roots


def test_companion_monomial():
    assert roots.real_roots([1, 0, 0, 0, 0, -32]) == pytest.approx([2.0])


def test_trim_and_zero_roots():
    c, zeros = roots.trim([0.0, 1.0, -3.0, 2.0, 0.0])
    assert c == [1.0, -3.0, 2.0] and zeros == 1
    assert roots.real_roots([1.0, -3.0, 2.0, 0.0]) == pytest.approx([0.0, 1.0, 2.0])


def test_descartes():
    assert roots.descartes_positive_bound([1, 1, 0, -1, -1, -1]) == 1
    assert roots.descartes_positive_bound([1, -1, 1]) == 2


@settings(max_examples=200)
@given(st.lists(st.floats(-10, 10), min_size=3, max_size=3))
def test_solve_cubic_matches_numpy(rs):
    rs = sorted(rs)
    a = 1.7
    c = a * np.poly(rs)
    got = roots.solve_cubic(*c)
    # each returned root is a root, and the largest real root is found
    for x in got:
        assert abs(np.polyval(c, x)) <= 1e-7 * max(1.0, np.max(np.abs(c))) * max(1.0, abs(x)) ** 3
    assert max(got) == pytest.approx(rs[-1], abs=1e-4 * max(1.0, abs(rs[-1])))


@settings(max_examples=300)
@given(st.lists(st.floats(-5, 5), min_size=4, max_size=4), st.floats(0.1, 10))
def test_solve_quartic_real_roots(rs, lead):
    rs = sorted(rs)
    # near-coincident clusters are ill-conditioned for any closed form
    assume(all(b - a > 0.05 for a, b in zip(rs, rs[1:])))
    c = lead * np.poly(rs)
    got = roots.solve_quartic(*c)
    for r in rs:
        assert min(abs(g - r) for g in got) < 1e-3 * max(1.0, abs(r))


@pytest.mark.parametrize("rs", [[0.0, 0.0, 1.0, 2.0], [1.0, 1.0, 1.7775, 1.7775], [-2.0, 3.0, 3.0, 3.0]])
def test_solve_quartic_repeated_roots(rs):
    got = roots.solve_quartic(*np.poly(rs))
    for r in rs:
        assert min(abs(g - r) for g in got) < 1e-4


def test_solve_quartic_depressed_form():
    # x^4 - b x - c with one positive root, checked against numpy
    a, b, c = 2.0, 3.0, 5.0
    got = [x for x in roots.solve_quartic(a, 0, 0, -b, -c) if x > 0]
    ref = [z.real for z in np.roots([a, 0, 0, -b, -c]) if abs(z.imag) < 1e-12 and z.real > 0]
    assert got == pytest.approx(ref, rel=1e-13)


def test_unique_positive_root():
    c = [1.0, 2.0, 0.0, -3.0, -4.0, -5.0]
    ref = [z.real for z in np.roots(c) if abs(z.imag) < 1e-12 and z.real > 0]
    for guess in (0.01, 1.0, 100.0):
        assert roots.unique_positive_root(c, guess) == pytest.approx(ref[0], rel=1e-14)
