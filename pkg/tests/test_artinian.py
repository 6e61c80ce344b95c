import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from froblab.artinian import (ArtinianModule, artinianize, h0_m, hom_from_cyclic, length,
                              matlis_dual_length, socle)
from froblab.experiments import build_thm32_modules, witness_monomials
from froblab.fp import FpMatrix, rank
from froblab.groebner import INFINITE
from froblab.homalg import FpModule, QuotientRing, ext, homology_length, koszul_resolution
from oracles import graded_homology_length, koszul_data, quotient_length

VARS = "X Y U V".split()


def main(p=2):
    return QuotientRing(p, VARS, ["X*Y - U*V"])


def K(R):
    return FpModule.cyclic(R, R.gens())


def test_artinianize_examples():
    R = main()
    A = artinianize(K(R))
    assert A.length == 1 and all(m.is_zero() for m in A.mult)
    x, y, u, v = R.gens()
    box = quotient_length(2, 4, [x * y - u * v, x ** 2, y ** 2, u ** 2, v ** 2], 4)
    assert artinianize(K(R).frobenius(1)).length == box == 10
    assert artinianize(FpModule.cyclic(R, ["X", "Y", "U + V"])).length == 2
    with pytest.raises(ValueError, match="module not Artinian"):
        artinianize(FpModule.free(R, 1))


@pytest.mark.parametrize("p,q", [(2, 2), (3, 3), (2, 4)])
def test_socle_matches_koszul_top_homology(p, q):
    # (0 :_M m) = H_4(x, y, u, v; M), computed degree by degree
    R = main(p)
    x, y, u, v = R.gens()
    diffs, shifts = koszul_data([x, y, u, v], [1] * 4)
    ideal = [x * y - u * v] + [g ** q for g in (x, y, u, v)]
    want = graded_homology_length(p, 4, ideal, diffs, shifts, 4, 4 * (q - 1) + 4)
    n = {2: 1, 3: 1, 4: 2}[q]
    assert socle(artinianize(K(R).frobenius(n)))[0] == want


def test_socle_examples():
    R = main(3)
    assert socle(artinianize(K(R)))[0] == 1
    for n in (1, 2):
        assert socle(artinianize(K(R).frobenius(n)))[0] >= 3 ** n
    T = QuotientRing(3, ["X"], [])
    assert socle(artinianize(FpModule.cyclic(T, ["X^2"])))[0] == 1


def test_hom_from_cyclic_examples():
    R = main()
    A = artinianize(K(R).frobenius(2))
    assert hom_from_cyclic(R.gens(), A) == socle(A)[0]
    assert hom_from_cyclic(["X", "Y", "U + V"], A) >= socle(A)[0]
    assert hom_from_cyclic(["1"], A) == 0
    assert hom_from_cyclic([], A) == A.length


def test_h0_m_examples():
    R = main()
    M = FpModule.cyclic(R, ["X^2", "Y", "U", "V^3"])
    assert h0_m(M).length == M.length() == 6
    assert h0_m(FpModule.free(R, 1)).length == 0
    mods = build_thm32_modules(2)
    E2 = ext(mods.M, 2, resolution=mods.res_M)
    for n in (1, 2):
        assert h0_m(E2.frobenius(n)).length == K(R).frobenius(n).length()
    S = QuotientRing(3, ["X", "Y"], [])
    assert h0_m(FpModule.cyclic(S, ["X^2", "X*Y"])).length == 1


def test_length_examples():
    R = main()
    assert length(K(R)) == 1
    assert length(FpModule.free(R, 1)) == INFINITE
    for q in (2, 4, 8):
        assert length(FpModule.cyclic(R, [f"X^{q}", "Y", "U", "V"])) == q
    assert length(artinianize(K(R))) == 1


def test_matlis_dual_length():
    R = main()
    assert matlis_dual_length(artinianize(K(R))) == 1
    F1 = artinianize(K(R).frobenius(1))
    assert matlis_dual_length(F1) == F1.length
    T = QuotientRing(2, ["X", "Y", "Z"], [])
    # K^3: every element is killed by m
    soc = artinianize(FpModule.free(T, 3).mod_ideal(T.gens()))
    assert socle(soc)[0] == soc.length == 3
    assert matlis_dual_length(soc) == 3


def test_construction_checks():
    R = QuotientRing(2, ["X", "Y"], [])
    a = FpMatrix([[0, 1], [0, 0]], 2)
    b = FpMatrix([[0, 0], [1, 0]], 2)
    with pytest.raises(ValueError, match="commute"):
        ArtinianModule(R, ["e1", "e2"], [a, b])
    with pytest.raises(ValueError, match="nilpotent"):
        ArtinianModule(R, ["e1"], [FpMatrix([[1]], 2), FpMatrix([[0]], 2)])
    H = QuotientRing(2, ["X", "Y"], ["X*Y"])
    with pytest.raises(ValueError, match="defining ideal"):
        ArtinianModule(H, ["1", "x", "y", "xy"],
                       [FpMatrix([[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]], 2),
                        FpMatrix([[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]], 2)])


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (3, 1)])
def test_multiplication_structure(p, n):
    R = main(p)
    A = artinianize(K(R).frobenius(n))
    assert A.commutes() and A.kills_ideal() and A.is_nilpotent()


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (3, 1), (5, 1)])
def test_witnesses_form_independent_socle_elements(p, n):
    R = main(p)
    q = p ** n
    A = artinianize(K(R).frobenius(n))
    vecs = [A.vector(w) for w in witness_monomials(R, q)]
    assert all(v.any() for v in vecs)
    for m in A.mult:
        assert not (m.a @ np.stack(vecs, axis=1) % p).any()
    assert rank(FpMatrix._wrap(np.stack(vecs, axis=1), p)) == q


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (3, 1)])
def test_tor3_equals_hom_two_routes(p, n):
    R = main(p)
    M = K(R).frobenius(n)
    C = koszul_resolution(R, ["X", "Y", "U + V"])
    assert homology_length(C, 3, M) == hom_from_cyclic(["X", "Y", "U + V"], artinianize(M))


def _random_artinian(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3])
    R = main(p)
    gens = [f"{v}^{rng.randint(1, 3)}" for v in VARS]
    if rng.random() < 0.5:
        gens.append(rng.choice(["X*U", "Y^2*V", "X + U^2", "U*V + Y^2"]))
    return R, artinianize(FpModule.cyclic(R, gens))


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_nonzero_artinian_has_socle(seed):
    _, A = _random_artinian(seed)
    assert A.length > 0 and socle(A)[0] >= 1


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_hom_monotone_in_ideal(seed):
    R, A = _random_artinian(seed)
    small = ["X", "Y"]
    big = ["X", "Y", "U + V"]
    assert hom_from_cyclic(small, A) >= hom_from_cyclic(big, A) >= hom_from_cyclic(R.gens(), A)
