"""The compiled and interpreted kernels are the same algorithm: same outputs."""

import random

import pytest

from lieq import _kernel
from lieq._kernel import _impl


def _random_matrix(rng, rows, cols, bound=20):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def test_backend_reports_name():
    assert _kernel.BACKEND in ("cython", "python")


@pytest.mark.skipif(_kernel.BACKEND != "cython",
                    reason="compiled backend unavailable")
def test_backends_agree_bitwise():
    rng = random.Random(20240811)
    for _ in range(40):
        rows = rng.randint(0, 6)
        cols = rng.randint(0, 6)
        mat = _random_matrix(rng, rows, cols)
        got = _kernel.snf_with_transforms([list(r) for r in mat], rows, cols)
        ref = _impl.snf_with_transforms([list(r) for r in mat], rows, cols)
        assert got == ref
        hn = _kernel.hnf_rows([list(r) for r in mat], cols)
        hr = _impl.hnf_rows([list(r) for r in mat], cols)
        assert hn == hr


def test_hnf_kernel_is_the_row_kernel():
    rng = random.Random(99)
    from lieq.exactlin import FpModule
    for _ in range(30):
        cols = rng.randint(1, 5)
        nrows = rng.randint(1, 8)
        mat = _random_matrix(rng, nrows, cols, bound=7)
        basis, ker = _kernel.hnf_rows_with_kernel([list(r) for r in mat], cols)
        # every kernel generator annihilates the matrix
        for k in ker:
            prod = [sum(k[i] * mat[i][j] for i in range(nrows))
                    for j in range(cols)]
            assert all(x == 0 for x in prod)
        # completeness: the kernel lattice has rank nrows - rank(mat), so the
        # quotient Z^nrows / kernel keeps exactly rank(mat) free factors
        rank = len(basis)
        kmod = FpModule(nrows, ker)
        assert sum(1 for d in kmod.invariant_factors if d == 0) == rank
        for i in range(nrows):
            if all(x == 0 for x in mat[i]):
                unit = [1 if j == i else 0 for j in range(nrows)]
                assert kmod.is_lattice_member(unit)


def test_hnf_preserves_lattice():
    rng = random.Random(7)
    from lieq.exactlin import FpModule
    for _ in range(25):
        cols = rng.randint(1, 5)
        mat = _random_matrix(rng, rng.randint(0, 6), cols, bound=9)
        reduced = _kernel.hnf_rows([list(r) for r in mat], cols)
        a = FpModule(cols, mat)
        b = FpModule(cols, reduced)
        assert a.invariant_factors == b.invariant_factors
        for r in mat:
            assert b.is_lattice_member(r)
        for r in reduced:
            assert a.is_lattice_member(r)
