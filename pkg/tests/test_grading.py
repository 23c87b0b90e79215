import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from builders import F2, Q, klein_group_algebra, linear_quiver, trivext_linear, truncated_poly
from gradalg.algcore import build_from_presentation, random_presentation
from gradalg.errors import InvalidGrading
from gradalg.grading import (
    Grading, associated_graded, degree_profile, degree_zero_part, graded_dims, grading_from_paths,
    peirce_position, regrade_by_shifts, validate_grading,
)


def test_path_grading_profile():
    a, g = truncated_poly(Q, 4)
    assert degree_profile(a, g) == ({0: 1, 1: 1, 2: 1, 3: 1}, 3)
    assert graded_dims(a, g) == (1, 1, 1, 1)


def test_invalid_grading_detected():
    a, _ = truncated_poly(Q, 3)
    assert validate_grading(a, Grading((0, 1, 1)))
    assert validate_grading(a, Grading((0, 1))) != []
    with pytest.raises(InvalidGrading):
        degree_profile(a, Grading((1, 1, 2)))


def test_degree_zero_part_of_trivial_extension():
    a, g, _ = trivext_linear(Q, 2)
    a0 = degree_zero_part(a, g)
    b, _ = linear_quiver(Q, 2)
    assert a0.dim == 3
    assert np.array_equal(a0.structure, b.structure)


def test_associated_graded_of_klein_group():
    a, g = klein_group_algebra()
    gr, ggr = associated_graded(a)
    assert graded_dims(gr, ggr) == (1, 2, 1)
    assert validate_grading(gr, ggr) == []


def test_peirce_position():
    a, _ = linear_quiver(Q, 2)
    i = a.labels.index("a1")
    assert peirce_position(a, i) == ("2", "1")


def test_regrade_shifts_arrow_degree():
    a, g = linear_quiver(Q, 2, degree=-3)
    new = regrade_by_shifts(a, g, {"1": 0, "2": -3})
    i = a.labels.index("a1")
    assert new[i] == 0
    assert validate_grading(a, new) == []


@settings(max_examples=25)
@given(st.integers(0, 10_000))
def test_regrading_preserves_validity(seed):
    rng = random.Random(seed)
    p = random_presentation(rng, rng.choice([Q, F2]), max_vertices=4, max_arrows=5,
                            degrees=(-2, 2))
    a = build_from_presentation(p)
    g = grading_from_paths(a, {x.name: x.degree for x in p.arrows})
    assert validate_grading(a, g) == []
    shifts = {v: rng.randint(-3, 3) for v in p.vertices}
    new = regrade_by_shifts(a, g, shifts)
    # an arrow v -> w sits in e_w A e_v and moves by d(v) - d(w)
    for i, pt in enumerate(a.paths):
        if isinstance(pt, str):
            assert new[i] == 0
        else:
            src, dst = p.arrow(pt[0]).source, p.arrow(pt[-1]).target
            assert new[i] == g[i] + shifts[src] - shifts[dst]
