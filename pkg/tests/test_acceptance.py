"""Acceptance checks, all exact.

Each check prints one ``PASS``/``FAIL`` line.  Run directly with
``python3 tests/test_acceptance.py`` for the summary alone.
"""

import random
import sys
import time
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from bottsamelson import _linalg as la  # noqa: E402
from bottsamelson.bs_word import analyze, canonical_class, expand_line_bundle  # noqa: E402
from bottsamelson.chow_ring import CycleClass, pairing_matrix  # noqa: E402
from bottsamelson.cones import (  # noqa: E402
    effective_cone_2cycles,
    effective_cone_divisors,
    nef2_cone,
    ray_intersection_matrix,
    sigma_report,
)
from bottsamelson.logfano import log_fano_certificate  # noqa: E402
from bottsamelson.orbits import dense_orbit_criterion  # noqa: E402
from bottsamelson.polyhedra import contains, dual_cone, reduce_to_extremal  # noqa: E402
from bottsamelson.root_system import RootSystem  # noqa: E402
from bottsamelson.weyl_group import bruhat_leq, from_word  # noqa: E402

A1, A2, A3, B3, C2, C3, G2 = (RootSystem.from_type(t) for t in ("A1", "A2", "A3", "B3", "C2", "C3", "G2"))


def words(rank, max_len, min_len=0):
    for n in range(min_len, max_len + 1):
        yield from product(range(1, rank + 1), repeat=n)


def gens(t, word):
    rep = effective_cone_divisors(analyze(word, t))
    return rep, [g.text() for g in rep.generators]


def c1_alternating_a2():
    rep, g = gens(A2, (1, 2, 1, 2))
    assert g == ["X1", "X2", "X3", "X4", "-X1 + X3 + X4"], g
    assert all(rep.extremal) and rep.extremal_count == 5


def c2_component_subtraction():
    res = sigma_report(analyze((1, 2, 1, 1), A2), 4)
    assert res.sigma.text() == "X1 - X2 - X3 + X4", res.sigma.text()
    assert res.components == ("X2",)


def c3_c2_generators():
    rep, g = gens(C2, (1, 2, 1, 2, 1, 2))
    assert g == ["X1", "X2", "X3", "X4", "X5", "X6", "-X1 + X3 + X4 + X5", "-2X1 - X2 + X4 + 2X5 + X6"], g


def _x(d, **coeffs):
    basis = [f"x{i}{j}" for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    return tuple(coeffs.get(k, 0) for k in basis)


def c4_codimension_two_pipeline():
    b = analyze((1, 2, 1, 2), C2)
    v = [
        _x(4, x12=1), _x(4, x13=1), _x(4, x14=1),
        _x(4, x23=1, x12=-1), _x(4, x24=1), _x(4, x34=1, x23=-1, x13=-2),
    ]
    eff = effective_cone_2cycles(b)
    assert set(eff.rays) == set(v)
    A = [
        [0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 1, -1], [0, 0, 0, 1, -2, 1],
        [0, 0, 1, 0, -2, 1], [0, 1, -2, -2, 4, -2], [1, -1, 1, 1, -2, 2],
    ]
    A_inv = [
        [0, 2, 1, 1, 1, 1], [2, 4, 2, 2, 1, 0], [1, 2, 0, 1, 0, 0],
        [1, 2, 1, 0, 0, 0], [1, 1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0],
    ]
    assert ray_intersection_matrix(b, v) == A
    assert la.inverse(A) == A_inv
    expected = {
        _x(4, x12=-1, x14=1, x24=1, x34=1), _x(4, x13=4, x14=2, x23=2, x24=1), _x(4, x13=2, x23=1),
        _x(4, x12=1, x13=2, x14=1), _x(4, x12=1, x13=1), _x(4, x12=1),
    }
    nef = nef2_cone(b)
    assert set(nef.rays) == expected
    # columns of A^-1 in the v basis are the same rays
    cols = {la.primitive([sum(A_inv[r][c] * v[r][k] for r in range(6)) for k in range(6)]) for c in range(6)}
    assert cols == expected
    assert all(contains(eff, r) for r in nef.rays)


def c5_redundant_standard_divisor():
    rep, g = gens(A1, (1, 1))
    assert g == ["X1", "X2", "-X1 + X2"]
    assert rep.extremal == (True, False, True)


def c6_extremal_scaling():
    for d, count in ((5, 7), (6, 9)):
        rep, _ = gens(A2, tuple(1 + k % 2 for k in range(d)))
        assert rep.extremal_count == count == 2 * d - 3, (d, rep.extremal_count)


def c7a_bruhat_oracle():
    for t in (A2, C2, G2, A3):
        elems, below = oracles.bruhat_by_subwords(t.cartan.entries)
        lib = {m: from_word(t, rw) for m, rw in elems.items()}
        for w, v in product(elems, repeat=2):
            assert bruhat_leq(lib[v], lib[w]) == (v in below[w]), (t.name, elems[v], elems[w])


def c7b_duality_and_unimodularity():
    for t in (A2, C2):
        for word in words(2, 5, 1):
            b = analyze(word, t)
            cone = effective_cone_divisors(b).cone
            assert dual_cone(dual_cone(cone)) == reduce_to_extremal(cone), word
            for k in range(b.d + 1):
                assert abs(la.det(pairing_matrix(b, k))) == 1, (word, k)


def c7c_sigma_validations():
    count = 0
    for t in (A2, C2, G2):
        for word in words(2, 6, 2):
            b = analyze(word, t)
            for i in b.sigma_positions:
                s = sigma_report(b, i)
                assert s.checks["coefficient_one"] and s.checks["fiber_pairing_one"], (t.name, word, i)
                assert s.ok
                count += 1
    assert count > 0


def c7d_dense_orbit():
    for t in (A2, C2, G2, A3):
        for word in words(t.rank, 5):
            b = analyze(word, t)
            if b.is_reduced:
                assert dense_orbit_criterion(b).satisfied, word
    rep = dense_orbit_criterion(analyze((1, 2, 1, 2, 1, 2), C2), (3, 4, 5, 6))
    assert rep.satisfied
    assert set(rep.characters) == {C2.simple_root(1), C2.simple_root(2)}


def c7e_log_fano():
    for t in (A2, C2):
        for word in words(2, 6):
            cert = log_fano_certificate(analyze(word, t))
            assert cert.checks == {"floor_zero": True, "ample": True, "decomposition": True}


def c8_anticanonical_cross_check():
    rng = random.Random(20261015)
    types = (A2, B3, C3, G2)
    for _ in range(200):
        t = rng.choice(types)
        word = tuple(rng.randint(1, t.rank) for _ in range(rng.randint(0, 8)))
        b = analyze(word, t)
        expected = oracles.anticanonical_by_coroots(t.cartan.entries, word)
        r = expand_line_bundle(b, b.d, -t.rho)
        assert [x + 1 for x in r] == expected, (t.name, word)
        assert list(canonical_class(b)) == [Fraction(x) for x in expected]


CRITERIA = [
    ("1", "alternating A2 word: five extremal generators", c1_alternating_a2),
    ("2", "A2 1,2,1,1: Sigma_4 and its subtracted component", c2_component_subtraction),
    ("3", "C2 1,2,1,2,1,2: eight generators", c3_c2_generators),
    ("4", "C2 1,2,1,2: Eff_2, intersection matrix, inverse, Nef^2, containment", c4_codimension_two_pipeline),
    ("5", "A1 1,1: X2 redundant", c5_redundant_standard_divisor),
    ("6", "alternating A2 words d = 5, 6: 2d - 3 extremal rays", c6_extremal_scaling),
    ("7a", "Bruhat order equals subword oracle on A2, C2, G2, A3", c7a_bruhat_oracle),
    ("7b", "double dual and unimodular pairing, words <= 5 over A2/C2", c7b_duality_and_unimodularity),
    ("7c", "Sigma validations, words <= 6 over A2/C2/G2", c7c_sigma_validations),
    ("7d", "dense orbit criterion on reduced words and C2 1,2,1,2,1,2", c7d_dense_orbit),
    ("7e", "log Fano certificates, words <= 6 over A2/C2", c7e_log_fano),
    ("8", "O_d(-rho) + 1 equals -K on 200 random words", c8_anticanonical_cross_check),
]


def run_one(fn):
    start = time.perf_counter()
    try:
        fn()
        ok, detail = True, ""
    except AssertionError as e:
        ok, detail = False, f" ({e})" if str(e) else ""
    return ok, time.perf_counter() - start, detail


def line(cid, desc, ok, secs, detail):
    return f"[acceptance] criterion {cid:<3} {'PASS' if ok else 'FAIL'} {secs:6.2f}s  {desc}{detail}"


@pytest.mark.parametrize("cid, desc, fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(cid, desc, fn, capsys):
    ok, secs, detail = run_one(fn)
    with capsys.disabled():
        print("\n" + line(cid, desc, ok, secs, detail))
    assert ok, detail
    assert secs < 10


if __name__ == "__main__":
    failed = 0
    for cid, desc, fn in CRITERIA:
        ok, secs, detail = run_one(fn)
        failed += not ok
        print(line(cid, desc, ok, secs, detail))
    sys.exit(1 if failed else 0)
