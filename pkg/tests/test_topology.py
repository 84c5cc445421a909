import time
from fractions import Fraction

import numpy as np
import pytest

from lagtetra.errors import InconsistentSequence, NotUnimodular
from lagtetra.topology import (
    SPACE_COHOMOLOGY,
    IntegerForm,
    betti_assemble,
    change_of_basis,
    classify_form,
    det_exact,
    direct_sum,
    fiber_certificate,
    intersection_form_of,
    intersection_form_solve,
    kernel_index,
    modular_kernel,
    mv_kernel,
    smith_normal_form,
    unimodular_q_candidates,
)
from lagtetra.verify import _random_unimodular


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_smith_normal_form_examples():
    d, u, v = smith_normal_form([[2, 4], [6, 8]])
    assert d == [[2, 0], [0, 4]]
    assert _matmul(_matmul(u, [[2, 4], [6, 8]]), v) == d
    d, _, _ = smith_normal_form([[1, 1, -3]])
    assert d == [[1, 0, 0]]


def test_smith_normal_form_random():
    rng = np.random.default_rng(51)
    for _ in range(50):
        a = rng.integers(-9, 10, size=(3, 4)).tolist()
        d, u, v = smith_normal_form(a)
        assert _matmul(_matmul(u, a), v) == d
        assert abs(det_exact(u)) == 1 and abs(det_exact(v)) == 1
        diag = [d[i][i] for i in range(3)]
        nz = [x for x in diag if x]
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_mv_kernel_has_index_three():
    basis = mv_kernel()
    assert kernel_index(basis) == 3
    for n, m in basis:
        assert (n + m) % 3 == 0
    change, det = change_of_basis(basis, [(2, 1), (1, 2)])
    assert abs(det) == 1


def test_modular_kernel_general():
    basis = modular_kernel((2, 3), 7)
    assert kernel_index(basis) == 7
    assert all((2 * a + 3 * b) % 7 == 0 for a, b in basis)


def test_intersection_system():
    assert det_exact([[-2, -2, 5], [4, 1, -4], [1, 4, -4]]) == 27
    for q in range(-6, 7):
        sol, det = intersection_form_solve(q)
        assert det == 27
        assert list(sol) == [Fraction(q, 3), Fraction(-q, 3), 0]


def test_unimodular_candidates():
    assert unimodular_q_candidates() == {-3, 3}
    assert intersection_form_of(3).as_ints() == [[1, 0], [0, -1]]
    assert intersection_form_of(-3).as_ints() == [[-1, 0], [0, 1]]


def test_classification_of_fiber_form():
    cls = classify_form(intersection_form_of(3))
    assert cls.as_dict() == {
        "rank": 2,
        "signature": 0,
        "parity": "odd",
        "definiteness": "indefinite",
        "model": "CP2#-CP2",
    }
    assert classify_form(intersection_form_of(-3)) == cls


def test_classification_table():
    assert classify_form(IntegerForm([[0, 1], [1, 0]])).model == "S2xS2"
    assert classify_form(IntegerForm([[1, 0], [0, 1]])).definiteness == "positive definite"
    assert classify_form(IntegerForm([[1]])).model == "other"
    with pytest.raises(NotUnimodular):
        classify_form(IntegerForm([[2, 0], [0, 1]]))
    with pytest.raises(NotUnimodular):
        classify_form(intersection_form_of(1))


def test_negation_and_direct_sum():
    rng = np.random.default_rng(52)
    for _ in range(50):
        f = _random_unimodular(rng, int(rng.integers(1, 6)))
        g = _random_unimodular(rng, int(rng.integers(1, 4)))
        a, b = classify_form(f), classify_form(-f)
        assert (b.rank, b.signature, b.parity) == (a.rank, -a.signature, a.parity)
        c = classify_form(direct_sum(f, g))
        assert c.rank == a.rank + g.rank
        assert c.signature == a.signature + classify_form(g).signature


def test_betti_table():
    table = betti_assemble()
    assert table.ranks == (1, 0, 2, 0, 1)
    assert table.describe() == ["Z", "0", "Z^2", "0", "Z"]
    assert table.euler_characteristic == 4


def test_betti_rejects_inconsistent_input():
    bad = {k: dict(v) for k, v in SPACE_COHOMOLOGY.items()}
    bad["Y"] = {"ranks": (1, 0, 1, 1, 0), "torsion": ((), (), (), (), ())}
    with pytest.raises(InconsistentSequence):
        betti_assemble(bad)


def test_certificate_is_exact_and_fast():
    start = time.perf_counter()
    a = fiber_certificate()
    assert time.perf_counter() - start < 1.0
    assert a == fiber_certificate()
    assert a["determinant"] == 27
    assert a["q_candidates"] == [-3, 3]
    assert a["form"] == [[1, 0], [0, -1]]
    assert a["classification"]["model"] == "CP2#-CP2"
