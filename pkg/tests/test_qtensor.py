"""Products, xi maps, actions, the quadratic functor, and the sequence checks."""

import pytest

from lieq.errors import NotAbelianInput
from lieq.exactlin import FpModule, unit_vec
from lieq.io_catalog import Catalog
from lieq.liealg import Ideal, center, hash_product, ideal_from_gens, lie_algebra, validate_q_crossed
from lieq.qtensor import (
    abelian_square_check,
    check_brace_identity,
    curly_image,
    gamma,
    gamma_map,
    gamma_map_i,
    gamma_sequence_check,
    product_action,
    q_exterior_product,
    q_tensor_product,
    right_exact_check,
    split_decomposition_check,
    tensor_to_exterior,
    xi,
)


def test_square_examples_rank_one():
    z = Catalog.get("Z")
    assert q_tensor_product(z, None, 2).invariant_factors() == (2, 0)
    assert q_exterior_product(z, None, 2).invariant_factors() == (0,)
    z2 = Catalog.get("Z/2")
    assert q_tensor_product(z2, None, 2).invariant_factors() == (2, 2)
    assert q_exterior_product(z2, None, 2).invariant_factors() == (2,)


def test_classical_square_of_abelian_is_module_square():
    zz = Catalog.get("Z^2")
    p = q_tensor_product(zz, None, 0)
    assert p.invariant_factors() == (0, 0, 0, 0)
    assert not p._br  # identically zero bracket


def test_perfect_tensor_equals_exterior():
    sl2 = Catalog.get("sl2@Z/5")
    for q in (0, 2, 3):
        t = q_tensor_product(sl2, None, q).invariant_factors()
        e = q_exterior_product(sl2, None, q).invariant_factors()
        assert t == e == (5, 5, 5)


def test_products_validate_bracket_and_jacobi():
    for name in ("Z", "Z/6", "heisenberg", "heisenberg@Z/2", "sl2@Z/5"):
        g = Catalog.get(name)
        for q in (0, 2):
            for build in (q_tensor_product, q_exterior_product):
                prod = build(g, None, q)
                prod.validate_bracket_well_defined()
                assert prod.jacobi_defects(stop_early=True) == []


def test_xi_examples():
    z = Catalog.get("Z")
    p = q_tensor_product(z, None, 2)
    hom = xi(p)
    assert hom.image().contains_vec((2,)) and not hom.image().contains_vec((1,))
    g = Catalog.get("heisenberg")
    p = q_tensor_product(g, None, 0)
    assert xi(p).image().same(hash_product(g, None, 0).sub)
    ab = lie_algebra([0, 0], {}, 0)
    assert xi(q_tensor_product(ab, None, 0)).image().is_zero()


def test_xi_image_equals_hash_product_sweep():
    from lieq.io_catalog import DEFAULT_CATALOG
    for name in DEFAULT_CATALOG:
        g = Catalog.get(name)
        for q in (0, 1, 2, 3, 4):
            for build in (q_tensor_product, q_exterior_product):
                assert xi(build(g, None, q)).image().same(
                    hash_product(g, None, q).sub), (name, q)


def test_xi_preserves_brackets():
    g = Catalog.get("heisenberg")
    assert not xi(q_tensor_product(g, None, 2)).bracket_defects()


def test_brace_identity():
    z = Catalog.get("Z")
    ok, _ = check_brace_identity(q_tensor_product(z, None, 2))
    assert ok
    with pytest.raises(ValueError):
        check_brace_identity(q_tensor_product(z, None, 0))
    for name in ("Z/6", "heisenberg", "sl2@Z/5"):
        g = Catalog.get(name)
        for q in (1, 2, 3):
            ok, wit = check_brace_identity(q_exterior_product(g, None, q))
            assert ok, (name, q, wit)


def test_product_action_validates():
    for name in ("Z", "Z/2", "heisenberg"):
        g = Catalog.get(name)
        for q in (0, 2):
            _, xm = product_action(q_tensor_product(g, None, q))
            assert validate_q_crossed(xm).ok


def test_product_action_condition_iii_z2():
    z2 = Catalog.get("Z/2")
    _, xm = product_action(q_tensor_product(z2, None, 2))
    ker = xm.mu.kernel()
    assert ker.invariant_factors == (2, 2)
    assert validate_q_crossed(xm).ok


def test_curly_image():
    z = Catalog.get("Z")
    assert curly_image(q_exterior_product(z, None, 2)).is_zero()
    full = curly_image(q_tensor_product(z, None, 0))
    assert full.invariant_factors == (0,)
    z2 = Catalog.get("Z/2")
    c = curly_image(q_tensor_product(z2, None, 2))
    assert c.invariant_factors == (2,)
    assert c.contains_vec(q_tensor_product(z2, None, 2).pure_units()[0])


def test_gamma_closed_form():
    assert gamma(FpModule.diagonal([0])).module.invariant_factors == (0,)
    assert gamma(FpModule.diagonal([2])).module.invariant_factors == (4,)
    assert gamma(FpModule.diagonal([3])).module.invariant_factors == (3,)
    assert gamma(FpModule.diagonal([2, 2])).module.invariant_factors == (2, 4, 4)
    g = gamma(FpModule.diagonal([0, 2]))
    labels = [s[0] for s in g.summands]
    assert labels == ["diag", "diag", "cross"]


def test_gamma_reduced_mod():
    g = gamma(FpModule.diagonal([2]))
    assert g.reduced_mod(2).module.invariant_factors == (2,)
    assert g.reduced_mod(0) is g


def test_gamma_map_example():
    z = Catalog.get("Z")
    gm = gamma_map(z, 2)
    assert gm.gamma.module.invariant_factors == (4,)
    assert gm.gamma_reduced.module.invariant_factors == (2,)
    img = gm.hom.image()
    assert img.invariant_factors == (2,)
    # image lands in the kernel of the wedge projection
    proj = tensor_to_exterior(gm.product, q_exterior_product(z, None, 2))
    for row in gm.hom.matrix.rows:
        assert proj.kernel().contains_vec(row)
    assert gamma_map_i(z, 2).source is gm.gamma.module or \
        gamma_map_i(z, 2).source.invariant_factors == (4,)


def test_gamma_sequence_checks():
    z = Catalog.get("Z")
    rep = gamma_sequence_check(z, 2)
    assert rep.exact and rep.hypothesis_free and rep.injective
    sl2 = Catalog.get("sl2@Z/5")
    rep = gamma_sequence_check(sl2, 0)
    assert rep.exact and rep.gamma_factors == ()
    z22 = lie_algebra([2, 2], {}, 0, "(Z/2)^2")
    rep = gamma_sequence_check(z22, 2)
    assert rep.exact and rep.hypothesis_free and rep.injective
    assert rep.gamma_factors == (2, 4, 4)
    assert rep.gamma_reduced_factors == (2, 2, 2)


def test_right_exactness_trivial_ideals():
    g = Catalog.get("heisenberg")
    rep = right_exact_check(g, ideal_from_gens(g, []), 2, "exterior")
    assert rep.exact_middle and rep.surjective_end
    rep = right_exact_check(g, Ideal.whole(g), 2, "exterior")
    assert rep.exact_middle and rep.surjective_end


def test_right_exactness_h3_center():
    g = Catalog.get("heisenberg")
    cen = Ideal(g, center(g))
    for q in (0, 2):
        for kind in ("exterior", "curly"):
            rep = right_exact_check(g, cen, q, kind)
            assert rep.exact_middle and rep.surjective_end, (q, kind)


def test_curly_literal_image_counterexample_is_pinned():
    """The brace-free part of the ideal product does not reach the whole
    kernel at q = 2: {e3} = 2(e1^e2) is pure in the big product only."""
    g = Catalog.get("heisenberg")
    cen = Ideal(g, center(g))
    rep = right_exact_check(g, cen, 2, "curly")
    assert rep.exact_middle
    assert rep.details["literal_image_exact"] is False
    rep0 = right_exact_check(g, cen, 0, "curly")
    assert rep0.details["literal_image_exact"] is True


def test_abelian_square_check():
    z = Catalog.get("Z")
    for q in (0, 1, 2, 3, 4, 6):
        assert abelian_square_check(z, q).ok
    with pytest.raises(NotAbelianInput):
        abelian_square_check(Catalog.get("heisenberg"), 2)


def test_split_decomposition():
    z = Catalog.get("Z")
    rep = split_decomposition_check(z, 2)
    assert rep.hypothesis_met and rep.matches
    assert rep.tensor_factors == (2, 0)
    assert rep.gamma_integer_factors == (4,)
    assert rep.gamma_reduced_factors == (2,)
    sl2 = Catalog.get("sl2@Z/5")
    rep = split_decomposition_check(sl2, 0)
    assert rep.hypothesis_met and rep.matches
    z33 = lie_algebra([3, 3], {}, 0, "(Z/3)^2")
    rep = split_decomposition_check(z33, 3)
    assert rep.hypothesis_met and rep.matches
    z24 = lie_algebra([2, 4], {}, 0, "Z/2+Z/4")
    rep = split_decomposition_check(z24, 4)
    assert not rep.hypothesis_met


def test_products_of_ideal_pairs():
    g = Catalog.get("heisenberg")
    cen = Ideal(g, center(g))
    p = q_exterior_product(g, cen, 2)
    assert p.p == 1 and p.nsym == 4
    assert p.invariant_factors() == (2, 2, 0)


def test_remark_q_perfect_tensor_is_exterior():
    for name in ("sl2@Z/5", "sl2@Z/7"):
        g = Catalog.get(name)
        for q in (0, 1, 2, 3, 4, 6):
            assert (q_tensor_product(g, None, q).invariant_factors()
                    == q_exterior_product(g, None, q).invariant_factors())
            assert xi(q_tensor_product(g, None, q)).hom.is_surjective()


def test_projection_kernel_is_generated_by_alternating_instances():
    for name in ("Z/6", "heisenberg", "heisenberg@Z/2"):
        g = Catalog.get(name)
        for q in (0, 2):
            pt = q_tensor_product(g, None, q)
            pe = q_exterior_product(g, None, q)
            proj = tensor_to_exterior(pt, pe)
            n = g.rank
            gens = [unit_vec(pt.nsym, pt.sym_pure(i, i)) for i in range(n)]
            for i in range(n):
                for k in range(i + 1, n):
                    row = [0] * pt.nsym
                    row[pt.sym_pure(i, k)] = 1
                    row[pt.sym_pure(k, i)] = 1
                    gens.append(tuple(row))
            from lieq.exactlin import Submodule
            assert proj.kernel().same(Submodule(pt.module, gens)), (name, q)
