"""Lie algebra layer: validation, centers, ideals, derivations, crossed modules."""

import pytest

from lieq.errors import NotAnIdeal, ValidationError
from lieq.exactlin import unit_vec
from lieq.io_catalog import Catalog
from lieq.liealg import (
    Ideal,
    LieAction,
    LieHom,
    QCrossedModule,
    adjoint_matrix,
    center,
    derivations,
    derived_ideal,
    direct_sum_algebras,
    hash_product,
    ideal_from_gens,
    inner_q_derivations,
    is_q_perfect,
    lie_algebra,
    q_center,
    quotient_algebra,
    validate,
    validate_q_crossed,
)


def h3():
    return Catalog.get("heisenberg")


# -- validation -----------------------------------------------------------------

def test_validate_abelian_and_heisenberg():
    assert validate(lie_algebra([0, 5, 2], {}, 0, "ab")).ok
    assert validate(h3()).ok


def test_validate_rejects_jacobi():
    with pytest.raises(ValidationError) as err:
        lie_algebra([0, 0, 0], {(0, 1): (0, 0, 1), (0, 2): (1, 0, 0)})
    assert any(i.kind == "jacobi" for i in err.value.report.issues)


def test_validate_rejects_torsion_incompatibility():
    # [e1,e2] = e2 with e1 of order 2 and e2 free: 2[e1,e2] = 2e2 is not 0
    with pytest.raises(ValidationError) as err:
        lie_algebra([2, 0], {(0, 1): (0, 1)})
    assert any(i.kind == "torsion" for i in err.value.report.issues)


def test_torsion_compatible_solvable_over_z2():
    g = lie_algebra([2, 2], {(0, 1): (0, 1)}, 2, "solv")
    assert validate(g).ok
    assert not g.is_abelian()


# -- centers ----------------------------------------------------------------------

def test_center_examples():
    ab = lie_algebra([0, 0], {}, 0)
    assert center(ab).contains_vec((1, 0)) and center(ab).contains_vec((0, 1))
    assert q_center(ab, 0).invariant_factors == (0, 0)
    g = h3()
    z = center(g)
    assert z.invariant_factors == (0,)
    assert z.contains_vec((0, 0, 1)) and not z.contains_vec((1, 0, 0))
    assert q_center(g, 2).is_zero()
    gz2 = Catalog.get("heisenberg@Z/2")
    z2c = q_center(gz2, 2)
    assert z2c.invariant_factors == (2,)
    assert z2c.contains_vec((0, 0, 1))


# -- hash products and perfectness --------------------------------------------------

def test_hash_product_examples():
    ab = lie_algebra([0], {}, 0)
    assert hash_product(ab, None, 0).sub.is_zero()
    two = hash_product(ab, None, 2)
    assert two.orders == (0,) and two.sub.contains_vec((2,)) \
        and not two.sub.contains_vec((1,))
    g = h3()
    hp = hash_product(g, None, 0)
    assert hp.sub.contains_vec((0, 0, 1)) and hp.orders == (0,)
    assert derived_ideal(g).sub.same(hp.sub)


def test_is_q_perfect():
    assert not is_q_perfect(lie_algebra([0], {}, 0), 0)
    assert is_q_perfect(lie_algebra([3], {}, 0), 2)
    assert is_q_perfect(Catalog.get("sl2@Z/5"), 0)
    assert not is_q_perfect(h3(), 0)


# -- ideals and quotients -------------------------------------------------------------

def test_ideal_rejects_non_ideal():
    g = h3()
    with pytest.raises(NotAnIdeal):
        ideal_from_gens(g, [(1, 0, 0)])  # span(e1) is not bracket-closed


def test_quotient_algebra_examples():
    g = h3()
    q0, _ = quotient_algebra(g, ideal_from_gens(g, []))
    assert q0.orders == g.orders and q0.table == g.table
    qc, proj = quotient_algebra(g, Ideal(g, center(g)))
    assert qc.orders == (0, 0) and qc.is_abelian()
    assert proj.hom.is_surjective()
    sl2 = Catalog.get("sl2@Z/5")
    qz, _ = quotient_algebra(sl2, Ideal.whole(sl2))
    assert qz.rank == 0


def test_quotient_projection_preserves_brackets():
    g = h3()
    _, proj = quotient_algebra(g, Ideal(g, center(g)))
    assert not proj.bracket_defects()


# -- derivations ------------------------------------------------------------------------

def test_derivations_examples():
    assert derivations(lie_algebra([0], {}, 0)).orders == (0,)
    assert derivations(lie_algebra([2], {}, 2)).orders == (2,)


def test_derivations_h3_mod2_vs_enumeration():
    g = Catalog.get("heisenberg@Z/2")
    der = derivations(g)
    # brute force: all 2^9 matrices, keep lattice-preserving Leibniz maps
    import itertools
    n = 3
    count = 0
    for bits in itertools.product((0, 1), repeat=9):
        mat = [bits[3 * i: 3 * i + 3] for i in range(n)]

        def apply(v):
            return tuple(sum(v[i] * mat[i][j] for i in range(n)) % 2
                         for j in range(n))

        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                lhs = apply(g.bracket(unit_vec(n, i), unit_vec(n, j)))
                ei, ej = unit_vec(n, i), unit_vec(n, j)
                rhs = tuple((a + b) % 2 for a, b in zip(
                    g.bracket(apply(ei), ej), g.bracket(ei, apply(ej))))
                if lhs != rhs:
                    ok = False
        count += ok
    order = 1
    for d in der.orders:
        order *= d
    assert order == count


def test_inner_derivations_are_derivations():
    g = h3()
    der = derivations(g)
    for a in range(g.rank):
        mat = adjoint_matrix(g, unit_vec(g.rank, a))
        flat = tuple(x for row in mat for x in row)
        assert der.sub.contains_vec(flat)


def test_inner_q_derivations_examples():
    ab = lie_algebra([0, 2], {}, 0)
    ider, xm = inner_q_derivations(ab, 0)
    assert ider.rank == 0
    z = lie_algebra([0], {}, 0)
    ider, xm = inner_q_derivations(z, 2)
    assert ider.orders == (0,)
    g = h3()
    ider, xm = inner_q_derivations(g, 0)
    assert ider.orders == (0, 0) and ider.is_abelian()
    assert validate_q_crossed(xm).ok
    assert xm.mu.kernel().same(q_center(g, 0))


# -- crossed modules ------------------------------------------------------------------

def test_identity_crossed_module():
    g = h3()
    n = g.rank
    constants = [[g.bracket(unit_vec(n, i), unit_vec(n, j)) for j in range(n)]
                 for i in range(n)]
    action = LieAction(g, g, constants)
    mu = LieHom(g, g, [[1 if i == j else 0 for j in range(n)] for i in range(n)])
    assert validate_q_crossed(QCrossedModule(mu, action, 0)).ok


def test_ideal_inclusion_crossed_module():
    g = h3()
    zc = Ideal(g, center(g))
    sub_mod, emb = zc.sub.as_module_with_embedding()
    sub_alg = lie_algebra(list(sub_mod.invariant_factors), {}, 0, "z")
    constants = [[zc.gb[j][i] for i in range(zc.p)] for j in range(g.rank)]
    action = LieAction(g, sub_alg, constants)
    mu = LieHom(sub_alg, g, [list(b) for b in zc.basis])
    assert validate_q_crossed(QCrossedModule(mu, action, 0)).ok


def test_crossed_module_condition_iii_fails():
    # Z/2 -> 0 with trivial action at q = 3: the kernel is not 3-torsion
    z2 = lie_algebra([2], {}, 2, "Z/2")
    zero = lie_algebra([], {}, 2, "0")
    action = LieAction(zero, z2, [])
    mu = LieHom(z2, zero, [[]])
    rep = validate_q_crossed(QCrossedModule(mu, action, 3))
    assert not rep.ok
    assert any(i.kind == "crossed-iii" for i in rep.issues)


def test_direct_sum_algebras():
    g = direct_sum_algebras(Catalog.get("Z/2"), h3())
    assert g.rank == 4
    assert validate(g).ok


def test_quotient_factors_split_for_abelian_summands():
    # split extensions of abelian algebras: factors of g are those of the
    # summand ideal together with those of the quotient
    from lieq.exactlin import merged_factors
    g = lie_algebra([2, 4, 0], {}, 0, "ab")
    for keep in ((0,), (1,), (2,), (0, 1), (1, 2)):
        gens = [unit_vec(3, i) for i in keep]
        h = ideal_from_gens(g, gens)
        q, _ = quotient_algebra(g, h)
        assert merged_factors([h.orders, q.orders]) == g.orders, keep
