from itertools import product

import pytest

from conftest import rs
from bottsamelson.bs_word import DivisorClass, analyze, x_to_o_coords
from bottsamelson.chow_ring import CycleClass
from bottsamelson.cones import (
    bruhat_covers,
    effective_cone_2cycles,
    effective_cone_divisors,
    is_ample,
    is_globally_generated,
    nef2_cone,
    nef_divisor_cone,
    schubert_divisor_weight,
    sigma_class,
    sigma_report,
)
from bottsamelson.errors import NonFiniteTypeError, PreconditionError, SigmaValidationError
from bottsamelson.polyhedra import contains
from bottsamelson.root_system import CartanMatrix, RootSystem
from bottsamelson.weyl_group import from_word, longest_element


def texts(report):
    return [g.text() for g in report.generators]


def test_p1_times_p1_second_ruling():
    rep = effective_cone_divisors(analyze((1, 1), rs("A1")))
    assert texts(rep) == ["X1", "X2", "-X1 + X2"]
    assert rep.extremal == (True, False, True)


def test_alternating_a2_word():
    rep = effective_cone_divisors(analyze((1, 2, 1, 2), rs("A2")))
    assert texts(rep)[-1] == "-X1 + X3 + X4"
    assert all(rep.extremal)
    assert rep.sigmas[0].components == ()


def test_component_subtracted():
    res = sigma_report(analyze((1, 2, 1, 1), rs("A2")), 4)
    assert res.sigma == (1, -1, -1, 1)
    assert res.components == ("X2",)
    assert res.multiplicities == (1,)


def test_c2_generators():
    rep = effective_cone_divisors(analyze((1, 2, 1, 2, 1, 2), rs("C2")))
    assert texts(rep)[6:] == ["-X1 + X3 + X4 + X5", "-2X1 - X2 + X4 + 2X5 + X6"]
    assert len(rep.generators) == 8 and all(rep.extremal)


def test_sigma_below_longest_element():
    # X(s_alpha) inside X(s_alpha s_beta) is cut out by 2 varpi_alpha - varpi_beta
    w = from_word(rs("C2"), (1, 2))
    assert schubert_divisor_weight(w, 2) == (-2, 1)
    assert sigma_class(analyze((1, 2, 2), rs("C2")), 3) == (-2, -1, 1)


def test_weight_at_longest_element_is_fundamental():
    for t in ("A2", "C2", "G2", "B3"):
        r = rs(t)
        w0 = longest_element(r)
        for b in range(1, r.rank + 1):
            lam = schubert_divisor_weight(w0, b)
            assert lam == tuple(int(k == b - 1) for k in range(r.rank))


def test_covers_pair_correctly():
    r = rs("G2")
    w = from_word(r, (1, 2, 1, 2))
    covers = bruhat_covers(w)
    assert len({v for v, _ in covers}) == len(covers) == 2
    assert all(v.length == 3 for v, _ in covers)


def test_fractional_schubert_weight_resolved():
    res = sigma_report(analyze((1, 2, 1, 1), rs("C2")), 4)
    assert res.schubert_weight[1].denominator == 2
    assert res.sigma.is_integral() and res.ok


@pytest.mark.parametrize("t, mults", [("A3", (1, 1, 1)), ("B3", (2, 1, 2)), ("C3", (2, 1, 1))])
def test_non_q_cartier_divisor_uses_chevalley_orders(t, mults):
    # X(s2 s1 s3) is not Q-Cartier in X(s2 s1 s3 s2)
    r = rs(t)
    assert schubert_divisor_weight(from_word(r, (2, 1, 3, 2)), 2) is None
    res = sigma_report(analyze((2, 1, 3, 2, 2), r), 5)
    assert res.ok and res.schubert_weight == r.fundamental_weight(2)
    got = dict(zip(res.components, res.multiplicities))
    assert (got["X1"], got["X2"], got["X3"]) == mults


def test_codimension_two_image_left_ambiguous():
    with pytest.raises(SigmaValidationError, match="ambiguous"):
        sigma_report(analyze((1, 3, 2, 1, 3, 3), rs("C3")), 6)


def test_sigma_preconditions():
    b = analyze((1, 2, 1, 1), rs("A2"))
    with pytest.raises(PreconditionError):
        sigma_class(b, 2)
    affine = RootSystem(CartanMatrix(((2, -2), (-2, 2))))
    with pytest.raises(NonFiniteTypeError):
        sigma_class(analyze((1, 1), affine), 2)
    # reduced words never need the positive roots
    assert len(effective_cone_divisors(analyze((1, 2, 1), affine)).generators) == 3


@pytest.mark.parametrize("t", ["A2", "C2", "G2"])
def test_corpus_properties(t):
    r = rs(t)
    for L in range(1, 7):
        for word in product((1, 2), repeat=L):
            b = analyze(word, r)
            rep = effective_cone_divisors(b)
            assert len(rep.generators) == b.d + len(b.sigma_positions)
            assert rep.extremal_count <= 2 * b.d - 1
            assert all(rep.extremal[b.d :])
            for s in rep.sigmas:
                assert s.ok and s.sigma[s.position - 1] == 1


@pytest.mark.parametrize("d, count", [(4, 5), (5, 7), (6, 9)])
def test_alternating_count(d, count):
    word = tuple(1 + k % 2 for k in range(d))
    assert effective_cone_divisors(analyze(word, rs("A2"))).extremal_count == count


def test_reduced_word_is_simplicial():
    rep = effective_cone_divisors(analyze((1, 2, 3, 1), rs("A3")))
    assert rep.cone.is_simplicial() and all(rep.extremal)


def test_nef_divisors():
    b = analyze((1, 1), rs("A1"))
    assert is_ample(b, (1, 1))
    assert is_ample(b, (0, 1))  # X_2 has class (1, 1) on P^1 x P^1
    assert is_globally_generated(b, (1, 0)) and not is_ample(b, (1, 0))
    assert set(nef_divisor_cone(b).rays) == {(1, 0), (-1, 1)}
    b = analyze((1, 2, 1, 2), rs("A2"))
    # Sigma_4 here is the pullback O_4(1): nef, but not ample
    assert x_to_o_coords(b, (-1, 0, 1, 1)) == (0, 0, 0, 1)
    assert is_globally_generated(b, (-1, 0, 1, 1)) and not is_ample(b, (-1, 0, 1, 1))
    assert not is_globally_generated(b, (1, -1, 0, 0))


def test_eff2_small_examples():
    b = analyze((1, 2, 1), rs("A2"))
    rays = {CycleClass.from_vector(3, 2, r).text() for r in effective_cone_2cycles(b).rays}
    assert rays == {"X12", "X13", "-X12 + X23"}
    b = analyze((1, 2), rs("A2"))
    assert effective_cone_2cycles(b).rays == ((1,),)


def test_eff2_preconditions():
    with pytest.raises(PreconditionError):
        effective_cone_2cycles(analyze((1, 1), rs("A1")))
    with pytest.raises(PreconditionError):
        nef2_cone(analyze((1, 2, 1), rs("A2")))


@pytest.mark.parametrize("t", ["C2", "G2", "A3", "B3"])
def test_nef2_inside_eff2_for_reduced_four_letter_words(t):
    r = rs(t)
    checked = 0
    for word in product(range(1, r.rank + 1), repeat=4):
        b = analyze(word, r)
        if not b.is_reduced:
            continue
        eff = effective_cone_2cycles(b)
        assert all(contains(eff, v) for v in nef2_cone(b).rays)
        checked += 1
    assert checked > 0
