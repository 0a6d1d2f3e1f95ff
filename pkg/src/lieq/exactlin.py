"""Exact integer linear algebra and finitely presented module arithmetic.

A finitely presented module is a quotient of Z^n (or (Z/m)^n, realized over Z
by appending m*e_i relations) by the lattice spanned by its relation rows.
The Smith normal form of that lattice yields canonical coordinates, invariant
factors, exact membership tests, kernels and quotients -- which is everything
the Lie-algebraic layers above need. All arithmetic is arbitrary-precision;
nothing here ever rounds or overflows.

Row-vector convention throughout: vectors are tuples, matrices act on the
right, ``h(v) = v @ matrix``.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Optional, Sequence

from lieq._kernel import (
    hnf_rows,
    hnf_rows_with_kernel,
    identity_matrix,
    matmul,
    snf_with_transforms,
)
from lieq.errors import NotWellDefined


# ---------------------------------------------------------------------------
# vector / matrix helpers

def vec_zero(n: int) -> tuple:
    return (0,) * n


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a):
    return tuple(-x for x in a)


def vec_scale(c, a):
    return tuple(c * x for x in a)


def vec_is_zero(a) -> bool:
    return all(x == 0 for x in a)


def vec_addmul(acc: list, c: int, row: Sequence) -> None:
    """acc += c * row, in place; skips when c is zero."""
    if c:
        for k, x in enumerate(row):
            if x:
                acc[k] += c * x


def apply_matrix(v: Sequence, rows: Sequence[Sequence], ncols: int) -> tuple:
    """Row vector times matrix, exploiting sparsity of v."""
    acc = [0] * ncols
    for i, c in enumerate(v):
        if c:
            vec_addmul(acc, c, rows[i])
    return tuple(acc)


def unit_vec(n: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(n))


class IntMatrix:
    """Immutable arbitrary-precision integer matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: Optional[int] = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows:
            ncols = len(rows[0])
            for r in rows:
                if len(r) != ncols:
                    raise ValueError("ragged matrix")
        elif ncols is None:
            ncols = 0
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(identity_matrix(n), ncols=n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        return IntMatrix(matmul([list(r) for r in self.rows],
                                [list(r) for r in other.rows]),
                         ncols=other.ncols)

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows \
            and self.ncols == other.ncols

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows) if self.rows else [],
                         ncols=self.nrows)

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, r in enumerate(self.rows)
                   for j, x in enumerate(r) if i != j)

    def __repr__(self):
        return f"IntMatrix({list(map(list, self.rows))!r})"


def det(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return 1
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def snf(m: IntMatrix):
    """Smith normal form: returns (D, U, V) with U*M*V = D.

    D is diagonal with d_1 | d_2 | ... and non-negative entries; U and V are
    unimodular.
    """
    d, u, v, _ = snf_with_transforms([list(r) for r in m.rows], m.nrows, m.ncols)
    return (IntMatrix(d, ncols=m.ncols),
            IntMatrix(u, ncols=m.nrows),
            IntMatrix(v, ncols=m.ncols))


def row_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list:
    """Lattice basis of { x : x @ rows == 0 }.

    Computed by companion-tracked Hermite reduction rather than a full Smith
    pass: the row-by-row reduction avoids the coefficient explosion a Smith
    reduction suffers on tall stacks.
    """
    if not rows:
        return []
    _, ker = hnf_rows_with_kernel(rows, ncols)
    return [tuple(k) for k in ker]


class _Solver:
    """Cached SNF of a row stack, for repeated ``x @ rows == b`` solves."""

    def __init__(self, rows: Sequence[Sequence[int]], ncols: int):
        self.nrows = len(rows)
        self.ncols = ncols
        d, u, v, _ = snf_with_transforms([list(r) for r in rows], self.nrows, ncols)
        self.diag = [d[i][i] if i < self.nrows else 0 for i in range(min(self.nrows, ncols))]
        self.u = u
        self.v = v

    def solve(self, b: Sequence[int]) -> Optional[tuple]:
        w = apply_matrix(b, self.v, self.ncols)
        z = [0] * self.nrows
        for i in range(self.ncols):
            di = self.diag[i] if i < len(self.diag) else 0
            if di:
                if w[i] % di:
                    return None
                z[i] = w[i] // di
            elif w[i]:
                return None
        return apply_matrix(z, self.u, self.nrows)


# ---------------------------------------------------------------------------
# finitely presented modules

class FpModule:
    """Quotient of an ambient free module by an integer relation lattice.

    ``base_modulus`` 0 means base ring Z; m >= 2 means Z/m, realized by
    silently appending m*e_i relations for every ambient generator so a
    single integer SNF pipeline serves both rings.

    ``orders`` has one entry per ambient rank, in divisibility order, 0
    denoting an infinite cyclic factor; ``invariant_factors`` is the same
    list with the trivial (=1) factors elided. The unimodular coordinate
    change is retained at full rank so coordinates round-trip.
    """

    __slots__ = ("ambient_rank", "base_modulus", "relations", "lattice_rows",
                 "orders", "invariant_factors", "_v", "_vinv",
                 "_pruned_pos", "_w_cols", "_w_orders")

    def __init__(self, ambient_rank: int, relations: Iterable[Sequence[int]],
                 base_modulus: int = 0):
        n = int(ambient_rank)
        m = int(base_modulus)
        if n < 0:
            raise ValueError("negative ambient rank")
        if m < 0 or m == 1:
            raise ValueError("base modulus must be 0 (ring Z) or >= 2 (ring Z/m)")
        rels = [tuple(int(x) for x in r) for r in relations]
        for r in rels:
            if len(r) != n:
                raise ValueError("relation length does not match ambient rank")
        self.ambient_rank = n
        self.base_modulus = m
        self.relations = tuple(rels)
        full = list(rels)
        if m:
            full.extend([tuple(m if j == i else 0 for j in range(n))
                         for i in range(n)])
        basis = hnf_rows(full, n)
        self.lattice_rows = tuple(tuple(r) for r in basis)
        d, _, v, vinv = snf_with_transforms([list(r) for r in basis], len(basis), n)
        lim = min(len(basis), n)
        orders = [d[i][i] if i < lim else 0 for i in range(n)]
        self.orders = tuple(orders)
        self.invariant_factors = tuple(o for o in orders if o != 1)
        self._v = tuple(tuple(r) for r in v)
        self._vinv = tuple(tuple(r) for r in vinv)
        self._pruned_pos = tuple(i for i, o in enumerate(orders) if o != 1)
        # Columns of V at non-trivial positions: enough for membership/canon.
        self._w_cols = tuple(tuple(row[i] for i in self._pruned_pos) for row in v)
        self._w_orders = tuple(orders[i] for i in self._pruned_pos)

    # -- constructors -------------------------------------------------------

    @classmethod
    def diagonal(cls, orders: Sequence[int], base_modulus: int = 0) -> "FpModule":
        """Module presented by d_i * e_i relations (d_i = 0 meaning free)."""
        n = len(orders)
        rels = [tuple(d if j == i else 0 for j in range(n))
                for i, d in enumerate(orders) if d]
        return cls(n, rels, base_modulus)

    # -- queries ------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def is_zero_module(self) -> bool:
        return not self.invariant_factors

    def zero(self) -> tuple:
        return vec_zero(self.ambient_rank)

    def canon(self, v: Sequence[int]) -> tuple:
        """Canonical reduced coordinates (one per invariant factor)."""
        k = len(self._pruned_pos)
        acc = [0] * k
        for i, c in enumerate(v):
            if c:
                vec_addmul(acc, c, self._w_cols[i])
        return tuple(x % d if d else x for x, d in zip(acc, self._w_orders))

    def is_lattice_member(self, v: Sequence[int]) -> bool:
        k = len(self._pruned_pos)
        acc = [0] * k
        for i, c in enumerate(v):
            if c:
                vec_addmul(acc, c, self._w_cols[i])
        return all((x % d == 0) if d else (x == 0)
                   for x, d in zip(acc, self._w_orders))

    def same_element(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.is_lattice_member(vec_sub(a, b))

    def lift_pruned(self, coords: Sequence[int]) -> tuple:
        """Ambient vector representing canonical coordinates."""
        full = [0] * self.ambient_rank
        for c, pos in zip(coords, self._pruned_pos):
            full[pos] = c
        return apply_matrix(full, self._vinv, self.ambient_rank)

    def canonical_basis(self) -> list:
        """Ambient representatives of the canonical generators."""
        k = len(self._pruned_pos)
        return [self.lift_pruned(unit_vec(k, t)) for t in range(k)]

    def annihilated_by(self, c: int) -> bool:
        return all(d and c % d == 0 for d in self.invariant_factors)

    def __repr__(self):
        ring = "Z" if not self.base_modulus else f"Z/{self.base_modulus}"
        return (f"FpModule(rank={self.ambient_rank}, over {ring}, "
                f"factors={list(self.invariant_factors)})")


def canonicalize(ambient_rank: int, relations: Iterable[Sequence[int]],
                 base_modulus: int = 0) -> FpModule:
    """Present a quotient module and compute its invariant-factor form."""
    return FpModule(ambient_rank, relations, base_modulus)


# ---------------------------------------------------------------------------
# homomorphisms

class ModuleHom:
    """Homomorphism between finitely presented modules.

    Given on ambient generators by an integer matrix; construction verifies
    that the source relation lattice maps into the target lattice.
    """

    __slots__ = ("source", "target", "matrix", "_solver")

    def __init__(self, source: FpModule, target: FpModule,
                 matrix, check: bool = True):
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix, ncols=target.ambient_rank)
        if matrix.nrows != source.ambient_rank or matrix.ncols != target.ambient_rank:
            raise ValueError("hom matrix has wrong shape")
        self.source = source
        self.target = target
        self.matrix = matrix
        self._solver = None
        if check:
            for r in source.lattice_rows:
                img = apply_matrix(r, matrix.rows, target.ambient_rank)
                if not target.is_lattice_member(img):
                    raise NotWellDefined(
                        f"relation {r} maps to {img}, outside the target lattice")

    @classmethod
    def identity(cls, module: FpModule) -> "ModuleHom":
        return cls(module, module, IntMatrix.identity(module.ambient_rank),
                   check=False)

    def __call__(self, v: Sequence[int]) -> tuple:
        return apply_matrix(v, self.matrix.rows, self.target.ambient_rank)

    def then(self, other: "ModuleHom") -> "ModuleHom":
        if other.source is not self.target:
            raise ValueError("composition endpoint mismatch")
        return ModuleHom(self.source, other.target, self.matrix * other.matrix,
                         check=False)

    def image(self) -> "Submodule":
        return Submodule(self.target, self.matrix.rows)

    def kernel(self) -> "Submodule":
        """Preimage of the target relation lattice, as a source submodule."""
        src, tgt = self.source, self.target
        ns = src.ambient_rank
        k = len(tgt._w_orders)
        # Congruence form: x in kernel iff x @ B vanishes modulo the diagonal
        # target orders; one auxiliary multiplier per finite-order column.
        rows = [list(apply_matrix(row, tgt._w_cols, k)) for row in self.matrix.rows]
        for idx, dcol in enumerate(tgt._w_orders):
            if dcol:
                rows.append([dcol if j == idx else 0 for j in range(k)])
        sols = row_kernel(rows, k)
        gens = [s[:ns] for s in sols]
        return Submodule(src, gens)

    def preimage(self, w: Sequence[int]) -> Optional[tuple]:
        """Some x with h(x) == w in the target, or None."""
        if self._solver is None:
            stacked = [list(r) for r in self.matrix.rows]
            stacked += [list(r) for r in self.target.lattice_rows]
            self._solver = _Solver(stacked, self.target.ambient_rank)
        x = self._solver.solve(w)
        if x is None:
            return None
        return x[:self.source.ambient_rank]

    def is_surjective(self) -> bool:
        img = self.image()
        n = self.target.ambient_rank
        return all(img.contains_vec(unit_vec(n, i)) for i in range(n))

    def __repr__(self):
        return f"ModuleHom({self.source!r} -> {self.target!r})"


def kernel(h: ModuleHom) -> "Submodule":
    return h.kernel()


# ---------------------------------------------------------------------------
# submodules and quotients

class Submodule:
    """Submodule of an FpModule generated by explicit ambient vectors.

    Keeps the ambient module, the generators, and (lazily) an abstract
    presentation with a chosen canonical generating basis plus solver, so a
    submodule doubles as a module-with-embedding.
    """

    def __init__(self, ambient: FpModule, gens: Iterable[Sequence[int]]):
        self.ambient = ambient
        self.gens = tuple(tuple(int(x) for x in g) for g in gens)
        for g in self.gens:
            if len(g) != ambient.ambient_rank:
                raise ValueError("generator length does not match ambient rank")
        self._quot = None
        self._abstract = None
        self._basis = None
        self._solver = None
        self._is_full = False

    @classmethod
    def full(cls, ambient: FpModule) -> "Submodule":
        """The whole module, with the canonical generators as basis.

        Only meaningful for modules already in pruned diagonal form (every
        Lie-algebra module is); then basis vectors are the ambient units.
        """
        n = ambient.ambient_rank
        sub = cls(ambient, [unit_vec(n, i) for i in range(n)])
        if ambient.orders == ambient.invariant_factors:
            sub._is_full = True
            sub._basis = [unit_vec(n, i) for i in range(n)]
        return sub

    # -- membership ---------------------------------------------------------

    @property
    def quotient_module(self) -> FpModule:
        """Ambient/self, also the membership oracle for the sub-lattice."""
        if self._quot is None:
            rels = list(self.ambient.lattice_rows) + list(self.gens)
            self._quot = FpModule(self.ambient.ambient_rank, rels)
        return self._quot

    def contains_vec(self, v: Sequence[int]) -> bool:
        return self.quotient_module.is_lattice_member(v)

    def contains(self, other: "Submodule") -> bool:
        return all(self.contains_vec(g) for g in other.gens)

    def same(self, other: "Submodule") -> bool:
        return self.contains(other) and other.contains(self)

    def is_zero(self) -> bool:
        return all(self.ambient.is_lattice_member(g) for g in self.gens)

    # -- abstract structure --------------------------------------------------

    @property
    def abstract(self) -> FpModule:
        """Presentation of the submodule on its given generators."""
        if self._abstract is None:
            p = len(self.gens)
            stacked = [list(g) for g in self.gens]
            stacked += [list(r) for r in self.ambient.lattice_rows]
            ker = row_kernel(stacked, self.ambient.ambient_rank)
            rels = [k[:p] for k in ker]
            self._abstract = FpModule(p, rels, self.ambient.base_modulus)
        return self._abstract

    @property
    def invariant_factors(self) -> tuple:
        if self._is_full:
            return self.ambient.invariant_factors
        return self.abstract.invariant_factors

    def basis(self) -> list:
        """Ambient vectors forming a canonical generating basis."""
        if self._basis is None:
            ab = self.abstract
            k = ab.rank
            rows = []
            for t in range(k):
                alpha = ab.lift_pruned(unit_vec(k, t))
                rows.append(apply_matrix(alpha, self.gens,
                                         self.ambient.ambient_rank))
            self._basis = rows
        return self._basis

    def solve(self, v: Sequence[int]) -> Optional[tuple]:
        """Coordinates of v over basis(), modulo the ambient lattice."""
        if self._is_full:
            return self.ambient.canon(v)
        base = self.basis()
        if self._solver is None:
            stacked = [list(b) for b in base]
            stacked += [list(r) for r in self.ambient.lattice_rows]
            self._solver = _Solver(stacked, self.ambient.ambient_rank)
        x = self._solver.solve(v)
        if x is None:
            return None
        return x[:len(base)]

    def as_module_with_embedding(self):
        """(diagonal FpModule, embedding ModuleHom into the ambient)."""
        mod = FpModule.diagonal(self.invariant_factors, self.ambient.base_modulus)
        emb = ModuleHom(mod, self.ambient, IntMatrix(self.basis(),
                        ncols=self.ambient.ambient_rank))
        return mod, emb

    def __repr__(self):
        return (f"Submodule(factors={list(self.invariant_factors)} "
                f"of {self.ambient!r})")


def submodule(module: FpModule, gens: Iterable[Sequence[int]]) -> Submodule:
    return Submodule(module, gens)


def quotient(module: FpModule, sub: Submodule):
    """Quotient module plus the projection homomorphism."""
    if sub.ambient is not module:
        raise ValueError("submodule does not live in the given module")
    q = FpModule(module.ambient_rank,
                 tuple(module.relations) + tuple(sub.gens),
                 module.base_modulus)
    proj = ModuleHom(module, q, IntMatrix.identity(module.ambient_rank),
                     check=False)
    return q, proj


def lattice_intersection(module: FpModule,
                         gens_a: Sequence[Sequence[int]],
                         gens_b: Sequence[Sequence[int]]) -> list:
    """Generators of (span(gens_a)+L) intersect (span(gens_b)+L)."""
    n = module.ambient_rank
    rows_a = [list(g) for g in gens_a] + [list(r) for r in module.lattice_rows]
    rows_b = [list(g) for g in gens_b] + [list(r) for r in module.lattice_rows]
    stacked = rows_a + [[-x for x in r] for r in rows_b]
    ker = row_kernel(stacked, n)
    na = len(rows_a)
    out = []
    for k in ker:
        v = apply_matrix(k[:na], rows_a, n)
        if not vec_is_zero(v):
            out.append(v)
    return out


# ---------------------------------------------------------------------------
# direct sums and closed forms for abelian squares

def direct_sum(modules: Sequence[FpModule]):
    """Direct sum; returns (module, offsets) with one offset per summand."""
    if modules:
        m = modules[0].base_modulus
        if any(x.base_modulus != m for x in modules):
            raise ValueError("mixed base rings in a direct sum")
    else:
        m = 0
    offsets = []
    total = 0
    for x in modules:
        offsets.append(total)
        total += x.ambient_rank
    rels = []
    for x, off in zip(modules, offsets):
        for r in x.relations:
            row = [0] * total
            row[off:off + x.ambient_rank] = list(r)
            rels.append(row)
    return FpModule(total, rels, m), offsets


def merged_factors(factor_lists: Iterable[Sequence[int]]) -> tuple:
    """Invariant factors of the direct sum of diagonal modules."""
    orders = [d for lst in factor_lists for d in lst]
    return FpModule.diagonal(orders).invariant_factors


def is_free_over(module: FpModule, k: int) -> bool:
    """True iff the module is free over Z (k=0), Z/k (k>=2), or zero (k=1)."""
    facs = module.invariant_factors
    if k == 0:
        return all(d == 0 for d in facs)
    if k == 1:
        return not facs
    return all(d == k for d in facs)


def tensor_square_ab(module: FpModule):
    """Tensor square of the underlying abelian module, with (i,j) labels.

    For M = +Z/d_i this is +_{i,j} Z/gcd(d_i, d_j), gcd(0, d) = d.
    """
    facs = module.invariant_factors
    labels = [(i, j) for i in range(len(facs)) for j in range(len(facs))]
    orders = [gcd(facs[i], facs[j]) for i, j in labels]
    return FpModule.diagonal(orders, module.base_modulus), labels


def exterior_square_ab(module: FpModule):
    """Exterior square of the underlying abelian module, with i<j labels."""
    facs = module.invariant_factors
    labels = [(i, j) for i in range(len(facs)) for j in range(i + 1, len(facs))]
    orders = [gcd(facs[i], facs[j]) for i, j in labels]
    return FpModule.diagonal(orders, module.base_modulus), labels


def lambda_q_modulus(base_modulus: int, q: int) -> int:
    """Characteristic of the quotient ring (base ring)/q: gcd(q, m)."""
    return gcd(q, base_modulus)


def describe_factors(factors: Sequence[int]) -> str:
    """Human form of an invariant factor list, e.g. 'Z/2 + Z'."""
    if not factors:
        return "0"
    return " + ".join("Z" if d == 0 else f"Z/{d}" for d in factors)
