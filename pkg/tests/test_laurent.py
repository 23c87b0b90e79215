import itertools

from hypothesis import given, strategies as st

from gradalg.laurent import LaurentPoly, det, det_leibniz, perm_sign

polys = st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), max_size=3).map(LaurentPoly)


def test_printing():
    assert str(LaurentPoly({0: 1, 1: 1, 2: 1})) == "1 + q + q^2"
    assert str(LaurentPoly({1: 2, -1: -1})) == "-q^-1 + 2q"
    assert str(LaurentPoly()) == "0"


def test_json_round_trip():
    p = LaurentPoly({-2: 3, 5: -1})
    assert LaurentPoly.from_json(p.to_json()) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(polys, polys)
def test_bar_and_shift(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert a.bar().bar() == a
    assert a.shift(2) == a * LaurentPoly.monomial(2)
    assert a.at_one() == a(1)


def test_perm_sign():
    for perm in itertools.permutations(range(4)):
        inversions = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
        assert perm_sign(list(perm)) == (-1) ** inversions


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(polys, min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_cofactor_and_leibniz_agree(m):
    assert det(m) == det_leibniz(m)


def test_det_value():
    q = LaurentPoly.monomial(1)
    one = LaurentPoly(1)
    assert det([[one + q, q], [one, one + q]]) == LaurentPoly({0: 1, 1: 1, 2: 1})
