"""Exact linear algebra: SNF, modules, submodules, kernels, quotients."""

import itertools
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from lieq.exactlin import (
    FpModule,
    IntMatrix,
    ModuleHom,
    Submodule,
    canonicalize,
    det,
    describe_factors,
    exterior_square_ab,
    is_free_over,
    kernel,
    lambda_q_modulus,
    merged_factors,
    quotient,
    snf,
    submodule,
    tensor_square_ab,
    unit_vec,
)
from lieq.testkit import brute_module_quotient

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-20, 20), min_size=c, max_size=c),
            min_size=r, max_size=r)))


# -- Smith normal form --------------------------------------------------------

def test_snf_zero_matrix():
    d, u, v = snf(IntMatrix([[0, 0], [0, 0]]))
    assert d == IntMatrix([[0, 0], [0, 0]])
    assert u == IntMatrix.identity(2)
    assert v == IntMatrix.identity(2)


def test_snf_identity():
    m = IntMatrix.identity(3)
    d, u, v = snf(m)
    assert d == m


def test_snf_2x2_example():
    m = IntMatrix([[2, 4], [6, 8]])
    d, u, v = snf(m)
    assert d == IntMatrix([[2, 0], [0, 4]])
    assert u * m * v == d
    assert abs(det(u)) == 1
    assert abs(det(v)) == 1


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_snf_postconditions(rows):
    m = IntMatrix(rows)
    d, u, v = snf(m)
    assert u * m * v == d
    assert abs(det(u)) == 1
    assert abs(det(v)) == 1
    diag = [d[i][i] for i in range(min(m.nrows, m.ncols))]
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        if a:
            assert b % a == 0
        else:
            assert b == 0
    assert all(d[i][j] == 0 for i in range(m.nrows)
               for j in range(m.ncols) if i != j)


def _minor_gcd(rows, k):
    """k-th determinantal divisor: gcd of all k x k minors."""
    m = len(rows)
    n = len(rows[0])
    g = 0
    for ris in itertools.combinations(range(m), k):
        for cis in itertools.combinations(range(n), k):
            sub = IntMatrix([[rows[i][j] for j in cis] for i in ris])
            g = gcd(g, det(sub))
    return g


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 8).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n),
                       min_size=2, max_size=8)))
def test_snf_determinantal_divisors(rows):
    m = IntMatrix(rows)
    d, _, _ = snf(m)
    diag = [d[i][i] for i in range(min(m.nrows, m.ncols))]
    for k in range(1, min(3, len(diag)) + 1):
        prod = 1
        for x in diag[:k]:
            prod *= x
        assert abs(prod) == abs(_minor_gcd(rows, k))


# -- canonicalization ----------------------------------------------------------

def test_canonicalize_examples():
    assert canonicalize(1, [], 0).invariant_factors == (0,)
    assert canonicalize(1, [[2]], 0).invariant_factors == (2,)
    m = canonicalize(2, [[2, 0], [0, 4]], 0)
    assert m.invariant_factors == (2, 4)
    # independent oracle: the same lattice inside (Z/8)^2, order census
    assert brute_module_quotient([8, 8], [(2, 0), (0, 4)]) == (2, 4)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_canonicalize_idempotent(rows):
    m = FpModule(len(rows[0]), rows)
    again = FpModule.diagonal(m.invariant_factors)
    assert again.invariant_factors == m.invariant_factors


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12), st.integers(1, 4))
def test_modulus_divides_factors(m, n):
    mod = FpModule(n, [], m)
    assert all(d >= 1 and m % d == 0 for d in mod.invariant_factors)


def test_roundtrip_coordinates():
    m = FpModule(3, [[2, 4, 0], [0, 6, 3]])
    for v in [(1, 0, 0), (0, 1, 0), (3, -2, 5)]:
        w = m.canon(v)
        lifted = m.lift_pruned(w)
        assert m.same_element(v, lifted)


# -- submodules ----------------------------------------------------------------

def test_submodule_examples():
    z2 = FpModule(2, [])
    assert submodule(z2, []).is_zero()
    z = FpModule(1, [])
    s = submodule(z, [(2,)])
    assert s.invariant_factors == (0,)
    assert s.basis() == [(2,)] or s.basis() == [(-2,)]
    z4 = FpModule(1, [], 4)
    s = submodule(z4, [(2,)])
    assert s.invariant_factors == (2,)
    assert s.contains_vec((2,)) and not s.contains_vec((1,))


def test_submodule_solve_and_embedding():
    z4sq = FpModule(2, [], 4)
    s = Submodule(z4sq, [(1, 1), (2, 0)])
    mod, emb = s.as_module_with_embedding()
    for t, b in enumerate(s.basis()):
        assert emb(unit_vec(mod.ambient_rank, t)) == b
    coords = s.solve((3, 1))
    assert coords is not None
    acc = [0, 0]
    for c, b in zip(coords, s.basis()):
        acc[0] += c * b[0]
        acc[1] += c * b[1]
    assert z4sq.same_element(tuple(acc), (3, 1))
    assert s.solve((0, 1)) is None or s.contains_vec((0, 1))


# -- kernels -------------------------------------------------------------------

def test_kernel_examples():
    z6 = FpModule(1, [], 6)
    assert kernel(ModuleHom(z6, z6, [[1]])).is_zero()
    z = FpModule(1, [])
    assert kernel(ModuleHom(z, z, [[0]])).invariant_factors == (0,)
    # multiplication by 2 on Z/6: enumerating residues gives {0, 3} = Z/2
    k = kernel(ModuleHom(z6, z6, [[2]]))
    assert k.invariant_factors == (2,)
    assert k.contains_vec((3,)) and not k.contains_vec((1,))
    brute = [x for x in range(6) if (2 * x) % 6 == 0]
    assert brute == [0, 3]


def test_hom_validation_rejects_bad_maps():
    z2 = FpModule(1, [], 2)
    z = FpModule(1, [])
    with pytest.raises(Exception):
        ModuleHom(z2, z, [[1]])  # 2*1 = 0 must map to 0 in Z


def test_preimage():
    z = FpModule(1, [])
    z2 = FpModule(1, [], 2)
    proj = ModuleHom(z, z2, [[1]])
    x = proj.preimage((1,))
    assert x is not None and z2.same_element(proj(x), (1,))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4),
       st.lists(st.lists(st.integers(-6, 6), min_size=1, max_size=4),
                min_size=1, max_size=4))
def test_first_isomorphism(ns, nt, rows):
    rows = [list(r[:nt]) + [0] * (nt - len(r)) for r in rows[:ns]]
    rows += [[0] * nt] * (ns - len(rows))
    src = FpModule(ns, [])  # free source: any matrix is a valid hom
    tgt = FpModule(nt, [[3 if i == j else 0 for j in range(nt)]
                        for i in range(nt)])
    h = ModuleHom(src, tgt, rows)
    ker = h.kernel()
    q, _ = quotient(src, ker)
    assert q.invariant_factors == h.image().invariant_factors


# -- quotients ------------------------------------------------------------------

def test_quotient_examples():
    z = FpModule(1, [])
    q, _ = quotient(z, submodule(z, [(2,)]))
    assert q.invariant_factors == (2,)
    z4sq = FpModule(2, [], 4)
    q, _ = quotient(z4sq, submodule(z4sq, [(1, 1)]))
    assert q.invariant_factors == (4,)
    m = FpModule(2, [[2, 0]])
    q, _ = quotient(m, submodule(m, []))
    assert q.invariant_factors == m.invariant_factors


# -- freeness and abelian squares -----------------------------------------------

def test_is_free_over():
    assert is_free_over(FpModule.diagonal([0, 0]), 0)
    assert not is_free_over(FpModule.diagonal([2, 4]), 4)
    assert is_free_over(FpModule.diagonal([3, 3]), 3)
    assert is_free_over(FpModule.diagonal([]), 1)
    assert not is_free_over(FpModule.diagonal([2]), 1)


def test_abelian_squares():
    z = FpModule.diagonal([0])
    assert tensor_square_ab(z)[0].invariant_factors == (0,)
    assert exterior_square_ab(z)[0].invariant_factors == ()
    m = FpModule.diagonal([2, 4])
    assert tensor_square_ab(m)[0].invariant_factors == (2, 2, 2, 4)
    m33 = FpModule.diagonal([3, 3])
    assert exterior_square_ab(m33)[0].invariant_factors == (3,)


def test_merged_factors_and_describe():
    assert merged_factors([(2,), (0, 3)]) == (6, 0)
    assert describe_factors((2, 0)) == "Z/2 + Z"
    assert describe_factors(()) == "0"


def test_lambda_q_modulus():
    assert lambda_q_modulus(0, 2) == 2
    assert lambda_q_modulus(0, 0) == 0
    assert lambda_q_modulus(6, 4) == 2
    assert lambda_q_modulus(5, 2) == 1
