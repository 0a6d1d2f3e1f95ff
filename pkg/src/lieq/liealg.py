"""Lie algebras over Z and Z/m as structure constants on a presented module.

An algebra is stored on the canonical (pruned, diagonal) basis of its
underlying module; arbitrary input presentations are brought to that form at
construction and the structure constants transported through the basis
change. Every algebraic identity -- Jacobi, torsion compatibility, action
axioms, crossed-module conditions -- is checked modulo the relation lattice,
which is where the identities live for a finitely presented module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from lieq.errors import NotAnIdeal, ValidationError
from lieq.exactlin import (
    FpModule,
    IntMatrix,
    ModuleHom,
    Submodule,
    apply_matrix,
    direct_sum,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_neg,
    vec_scale,
    vec_sub,
    vec_zero,
)


# ---------------------------------------------------------------------------
# validation reports

@dataclass(frozen=True)
class ValidationIssue:
    kind: str        # "jacobi" | "torsion" | "action" | "crossed-i" | ...
    where: tuple     # offending generator indices
    witness: tuple   # vector that failed to lie in the lattice

    def __str__(self):
        return f"{self.kind}{self.where}: witness {self.witness}"


@dataclass
class ValidationReport:
    subject: str
    issues: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, kind, where, witness):
        self.issues.append(ValidationIssue(kind, tuple(where), tuple(witness)))

    def __str__(self):
        if self.ok:
            return f"{self.subject}: ok"
        head = "; ".join(str(i) for i in self.issues[:3])
        more = "" if len(self.issues) <= 3 else f" (+{len(self.issues) - 3} more)"
        return f"{self.subject}: {head}{more}"


def _bracket_of_vectors(table, u, v, n):
    """Bilinear expansion of [u, v] through an antisymmetric table."""
    acc = [0] * n
    for i, ci in enumerate(u):
        if not ci:
            continue
        ti = table[i]
        for j, cj in enumerate(v):
            if cj and i != j:
                row = ti[j]
                c = ci * cj
                for k, x in enumerate(row):
                    if x:
                        acc[k] += c * x
    return tuple(acc)


def _validate_table(module: FpModule, table, subject: str) -> ValidationReport:
    """Check torsion compatibility and Jacobi modulo the relation lattice."""
    n = module.ambient_rank
    report = ValidationReport(subject)
    for r in module.lattice_rows:
        for j in range(n):
            w = _bracket_of_vectors(table, r, unit_vec(n, j), n)
            if not module.is_lattice_member(w):
                report.add("torsion", (tuple(r), j), w)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                w = vec_add(
                    vec_add(_bracket_of_vectors(table, table[i][j], unit_vec(n, k), n),
                            _bracket_of_vectors(table, table[j][k], unit_vec(n, i), n)),
                    _bracket_of_vectors(table, table[k][i], unit_vec(n, j), n))
                if not module.is_lattice_member(w):
                    report.add("jacobi", (i, j, k), w)
    return report


class LieAlgebra:
    """Structure constants on the canonical basis of a presented module.

    ``table[i][j]`` is the coordinate vector of [e_i, e_j]; the table is
    antisymmetric with zero diagonal, so the bracket is alternating by
    construction (as required over rings where 2 is not invertible).
    """

    def __init__(self, module: FpModule, table, name: str = "g",
                 check: bool = True):
        n = module.ambient_rank
        if module.orders != module.invariant_factors:
            raise ValueError("LieAlgebra module must be in pruned diagonal form")
        self.module = module
        self.name = name
        full = [[vec_zero(n) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                entry = tuple(int(x) for x in table[i][j])
                if i == j and not vec_is_zero(entry):
                    raise ValueError("diagonal bracket must vanish")
                full[i][j] = entry
        for i in range(n):
            for j in range(i + 1, n):
                if full[j][i] != vec_neg(full[i][j]):
                    raise ValueError("bracket table is not antisymmetric")
        self.table = tuple(tuple(r) for r in full)
        if check:
            report = _validate_table(module, self.table, name)
            if not report.ok:
                raise ValidationError(report)

    # -- structure ----------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.module.ambient_rank

    @property
    def orders(self) -> tuple:
        return self.module.invariant_factors

    @property
    def base_modulus(self) -> int:
        return self.module.base_modulus

    def bracket(self, u: Sequence[int], v: Sequence[int]) -> tuple:
        return _bracket_of_vectors(self.table, u, v, self.rank)

    # qtensor and the action machinery treat any bracketed object uniformly
    bracket_vec = bracket

    def is_abelian(self) -> bool:
        return all(self.module.is_lattice_member(self.table[i][j])
                   for i in range(self.rank) for j in range(i + 1, self.rank))

    def generator_names(self) -> list:
        return [f"e{i + 1}" for i in range(self.rank)]

    def __repr__(self):
        ring = "Z" if not self.base_modulus else f"Z/{self.base_modulus}"
        return f"LieAlgebra({self.name!r}, factors={list(self.orders)}, over {ring})"


def _transport(module0: FpModule, table0, name: str):
    """Re-express a bracket table on the pruned canonical basis.

    Returns (algebra, projection_rows, lifts): projection_rows express the
    old ambient generators in new coordinates, lifts are ambient vectors
    representing the new generators.
    """
    n0 = module0.ambient_rank
    k = module0.rank
    lifts = module0.canonical_basis()
    new_table = [[vec_zero(k) for _ in range(k)] for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            w = module0.canon(_bracket_of_vectors(table0, lifts[a], lifts[b], n0))
            new_table[a][b] = w
            new_table[b][a] = vec_neg(w)
    module = FpModule.diagonal(module0.invariant_factors, module0.base_modulus)
    alg = LieAlgebra(module, new_table, name, check=True)
    proj_rows = [module0.canon(unit_vec(n0, i)) for i in range(n0)]
    return alg, proj_rows, lifts


def from_module_data(module0: FpModule, table0, name: str = "g") -> LieAlgebra:
    """Validate a bracket table on an arbitrary presentation, then canonize."""
    report = _validate_table(module0, table0, name)
    if not report.ok:
        raise ValidationError(report)
    alg, _, _ = _transport(module0, table0, name)
    return alg


def lie_algebra(orders: Sequence[int], brackets: Optional[dict] = None,
                modulus: int = 0, name: str = "g") -> LieAlgebra:
    """Build an algebra from per-generator orders and sparse brackets.

    ``brackets`` maps index pairs (i, j), i < j, to coordinate vectors of
    [e_i, e_j]; unspecified brackets are zero, antisymmetry is filled in.
    """
    n = len(orders)
    module0 = FpModule.diagonal(orders, modulus)
    table = [[vec_zero(n) for _ in range(n)] for _ in range(n)]
    for (i, j), vec in (brackets or {}).items():
        if i == j:
            raise ValueError("diagonal bracket must vanish")
        entry = tuple(int(x) for x in vec)
        table[i][j] = entry
        table[j][i] = vec_neg(entry)
    return from_module_data(module0, table, name)


def validate(g: LieAlgebra) -> ValidationReport:
    """Re-run the structure checks on a built algebra."""
    return _validate_table(g.module, g.table, g.name)


# ---------------------------------------------------------------------------
# centers

def _adjoint_stack(g: LieAlgebra, q: Optional[int] = None):
    """The map x -> ([x, e_1], ..., [x, e_n] [, q x]) with its target."""
    n = g.rank
    copies = [g.module] * (n + (1 if q is not None else 0))
    target, offsets = direct_sum(copies)
    rows = []
    for a in range(n):
        row = [0] * target.ambient_rank
        for j in range(n):
            for kk, x in enumerate(g.table[a][j]):
                row[offsets[j] + kk] = x
        if q is not None:
            row[offsets[n] + a] = q
        rows.append(row)
    return ModuleHom(g.module, target, IntMatrix(rows, ncols=target.ambient_rank),
                     check=False)


def center(g: LieAlgebra) -> Submodule:
    """Elements bracketing to zero with the whole algebra."""
    return _adjoint_stack(g).kernel()


def q_center(g: LieAlgebra, q: int) -> Submodule:
    """Central elements additionally annihilated by q."""
    return _adjoint_stack(g, q).kernel()


# ---------------------------------------------------------------------------
# ideals

class Ideal:
    """A bracket-closed submodule with precomputed induced coordinates.

    ``basis`` lists the ambient vectors of the chosen generating basis
    b_1..b_p (diagonal orders); ``gb[j][i]`` holds [e_j, b_i] and
    ``bb[i][k]`` holds [b_i, b_k], both in ideal coordinates. Construction
    fails loudly when closure does not hold.
    """

    def __init__(self, parent: LieAlgebra, sub: Submodule):
        if sub.ambient is not parent.module:
            raise ValueError("submodule does not live in the parent's module")
        self.parent = parent
        self.sub = sub
        self.basis = [tuple(b) for b in sub.basis()]
        self.orders = tuple(sub.invariant_factors)
        p = len(self.basis)
        n = parent.rank
        self.gb = [[None] * p for _ in range(n)]
        for j in range(n):
            ej = unit_vec(n, j)
            for i in range(p):
                w = parent.bracket(ej, self.basis[i])
                coords = sub.solve(w)
                if coords is None:
                    raise NotAnIdeal(
                        f"[e{j + 1}, b{i + 1}] = {w} falls outside the submodule")
                self.gb[j][i] = tuple(coords)
        self.bb = [[None] * p for _ in range(p)]
        for i in range(p):
            self.bb[i][i] = vec_zero(p)
            for k in range(i + 1, p):
                w = parent.bracket(self.basis[i], self.basis[k])
                coords = sub.solve(w)
                if coords is None:
                    raise NotAnIdeal(
                        f"[b{i + 1}, b{k + 1}] = {w} falls outside the submodule")
                self.bb[i][k] = tuple(coords)
                self.bb[k][i] = vec_neg(coords)

    @classmethod
    def whole(cls, g: LieAlgebra) -> "Ideal":
        return cls(g, Submodule.full(g.module))

    @property
    def p(self) -> int:
        return len(self.basis)

    def embed(self, coords: Sequence[int]) -> tuple:
        """Ideal coordinates -> ambient vector of the parent."""
        return apply_matrix(coords, self.basis, self.parent.rank)

    def coords(self, v: Sequence[int]) -> Optional[tuple]:
        return self.sub.solve(v)

    def is_whole(self) -> bool:
        n = self.parent.rank
        return all(self.sub.contains_vec(unit_vec(n, i)) for i in range(n))

    def __repr__(self):
        return f"Ideal(factors={list(self.orders)} of {self.parent.name!r})"


def ideal_from_gens(g: LieAlgebra, gens) -> Ideal:
    return Ideal(g, Submodule(g.module, gens))


def hash_product(g: LieAlgebra, h: Optional[Ideal], q: int) -> Ideal:
    """The ideal generated by all [h, g] brackets and all q-multiples of h.

    The image of both product-to-algebra homomorphisms lands here; for
    h = g and q = 0 this is the derived subalgebra.
    """
    if h is None:
        h = Ideal.whole(g)
    n = g.rank
    gens = []
    for b in h.basis:
        for j in range(n):
            gens.append(g.bracket(b, unit_vec(n, j)))
        if q:
            gens.append(vec_scale(q, b))
    return Ideal(g, Submodule(g.module, gens))


def derived_ideal(g: LieAlgebra) -> Ideal:
    return hash_product(g, None, 0)


def is_q_perfect(g: LieAlgebra, q: int) -> bool:
    hp = hash_product(g, None, q)
    n = g.rank
    return all(hp.sub.contains_vec(unit_vec(n, i)) for i in range(n))


def quotient_algebra(g: LieAlgebra, h: Ideal):
    """Quotient by an ideal; returns (algebra, projection LieHom)."""
    if h.parent is not g:
        raise NotAnIdeal("ideal does not belong to this algebra")
    module0 = FpModule(g.rank, tuple(g.module.relations) + tuple(h.sub.gens),
                       g.base_modulus)
    alg, proj_rows, lifts = _transport(module0, g.table, f"{g.name}/{'h'}")
    hom = LieHom(g, alg, proj_rows)
    hom.section_vectors = lifts
    return alg, hom


# ---------------------------------------------------------------------------
# homomorphisms of algebras

class LieHom:
    """Bracket-preserving ModuleHom between bracketed objects.

    Source and target only need ``.module`` and ``.bracket_vec``; that covers
    both algebras and the symbol-presented products.
    """

    def __init__(self, source, target, matrix, check: bool = True):
        self.source = source
        self.target = target
        self.hom = ModuleHom(source.module, target.module, matrix, check=check)
        self.section_vectors = None
        if check:
            bad = self.bracket_defects(stop_early=True)
            if bad:
                report = ValidationReport("LieHom")
                for where, witness in bad:
                    report.add("bracket", where, witness)
                raise ValidationError(report)

    def __call__(self, v):
        return self.hom(v)

    def bracket_defects(self, stop_early: bool = False) -> list:
        """Pairs where hom([x,y]) differs from [hom x, hom y]."""
        n = self.source.module.ambient_rank
        out = []
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.hom(self.source.bracket_vec(unit_vec(n, i), unit_vec(n, j)))
                rhs = self.target.bracket_vec(self.hom(unit_vec(n, i)),
                                              self.hom(unit_vec(n, j)))
                if not self.target.module.is_lattice_member(vec_sub(lhs, rhs)):
                    out.append(((i, j), vec_sub(lhs, rhs)))
                    if stop_early:
                        return out
        return out

    def kernel(self) -> Submodule:
        return self.hom.kernel()

    def image(self) -> Submodule:
        return self.hom.image()


# ---------------------------------------------------------------------------
# actions and crossed modules

class LieAction:
    """A left action of an algebra on a bracketed module object.

    ``constants[i][j]`` is the acted-coordinate vector of e_i acting on the
    j-th generator of the acted object.
    """

    def __init__(self, actor: LieAlgebra, acted, constants, check: bool = True):
        self.actor = actor
        self.acted = acted
        self.constants = tuple(tuple(tuple(int(x) for x in c) for c in row)
                               for row in constants)
        if check:
            report = self.validate()
            if not report.ok:
                raise ValidationError(report)

    def act(self, gvec: Sequence[int], hvec: Sequence[int]) -> tuple:
        nh = self.acted.module.ambient_rank
        acc = [0] * nh
        for i, ci in enumerate(gvec):
            if not ci:
                continue
            row = self.constants[i]
            for j, cj in enumerate(hvec):
                if cj:
                    c = ci * cj
                    for k, x in enumerate(row[j]):
                        if x:
                            acc[k] += c * x
        return tuple(acc)

    def validate(self) -> ValidationReport:
        report = ValidationReport("LieAction")
        g, hmod = self.actor, self.acted.module
        n = g.rank
        nh = hmod.ambient_rank
        for r in g.module.lattice_rows:
            for j in range(nh):
                w = self.act(r, unit_vec(nh, j))
                if not hmod.is_lattice_member(w):
                    report.add("action-actor-relations", (tuple(r), j), w)
        for s in hmod.lattice_rows:
            for i in range(n):
                w = self.act(unit_vec(n, i), s)
                if not hmod.is_lattice_member(w):
                    report.add("action-acted-relations", (i, tuple(s)), w)
        for i in range(n):
            ei = unit_vec(n, i)
            for k in range(i + 1, n):
                ek = unit_vec(n, k)
                for j in range(nh):
                    ej = unit_vec(nh, j)
                    lhs = self.act(g.table[i][k], ej)
                    rhs = vec_sub(self.act(ei, self.act(ek, ej)),
                                  self.act(ek, self.act(ei, ej)))
                    if not hmod.is_lattice_member(vec_sub(lhs, rhs)):
                        report.add("action-axiom-1", (i, k, j), vec_sub(lhs, rhs))
        for i in range(n):
            ei = unit_vec(n, i)
            for j in range(nh):
                ej = unit_vec(nh, j)
                aij = self.act(ei, ej)
                for l in range(j + 1, nh):
                    el = unit_vec(nh, l)
                    lhs = self.act(ei, self.acted.bracket_vec(ej, el))
                    rhs = vec_add(self.acted.bracket_vec(aij, el),
                                  self.acted.bracket_vec(ej, self.act(ei, el)))
                    if not hmod.is_lattice_member(vec_sub(lhs, rhs)):
                        report.add("action-axiom-2", (i, j, l), vec_sub(lhs, rhs))
        return report


class QCrossedModule:
    """A homomorphism with compatible action whose kernel is q-torsion."""

    def __init__(self, mu: LieHom, action: LieAction, q: int):
        self.mu = mu
        self.action = action
        self.q = int(q)

    def validate(self) -> ValidationReport:
        return validate_q_crossed(self)


def validate_q_crossed(xm: QCrossedModule) -> ValidationReport:
    """Equivariance, Peiffer identity and q-torsion of the kernel."""
    report = ValidationReport("QCrossedModule")
    act_report = xm.action.validate()
    report.issues.extend(act_report.issues)
    mu, action, q = xm.mu, xm.action, xm.q
    g = action.actor
    acted = action.acted
    n = g.rank
    nh = acted.module.ambient_rank
    for i in range(n):
        ei = unit_vec(n, i)
        for j in range(nh):
            ej = unit_vec(nh, j)
            lhs = mu(action.act(ei, ej))
            rhs = g.bracket(ei, mu(ej))
            if not g.module.is_lattice_member(vec_sub(lhs, rhs)):
                report.add("crossed-i", (i, j), vec_sub(lhs, rhs))
    for j in range(nh):
        ej = unit_vec(nh, j)
        mj = mu(ej)
        for l in range(nh):
            if l == j:
                continue
            el = unit_vec(nh, l)
            lhs = action.act(mj, el)
            rhs = acted.bracket_vec(ej, el)
            if not acted.module.is_lattice_member(vec_sub(lhs, rhs)):
                report.add("crossed-ii", (j, l), vec_sub(lhs, rhs))
    for kgen in mu.kernel().gens:
        w = vec_scale(q, kgen)
        if not acted.module.is_lattice_member(w):
            report.add("crossed-iii", (tuple(kgen),), w)
    return report


# ---------------------------------------------------------------------------
# derivations

class DerivationAlgebra(LieAlgebra):
    """Derivations of an algebra, with the witnessing matrices attached."""

    def __init__(self, module, table, matrices, sub, name, check=True):
        super().__init__(module, table, name, check=check)
        self.matrices = matrices
        self.sub = sub


def _compose_matrices(d1, d2, n):
    """Matrix of x -> d1(d2(x)) for row-convention endomorphisms."""
    out = []
    for i in range(n):
        acc = [0] * n
        for j, c in enumerate(d2[i]):
            if c:
                for k, x in enumerate(d1[j]):
                    if x:
                        acc[k] += c * x
        out.append(tuple(acc))
    return tuple(out)


def derivations(m: LieAlgebra) -> DerivationAlgebra:
    """All lattice-preserving self-maps satisfying the Leibniz identity.

    Computed as a kernel inside the n^2-dimensional endomorphism module;
    the result carries the commutator bracket.
    """
    n = m.rank
    npairs = n * (n - 1) // 2
    endo, endo_off = direct_sum([m.module] * n) if n else (FpModule(0, []), [])
    blocks = n + npairs
    target, toff = direct_sum([m.module] * blocks) if blocks else (FpModule(0, []), [])
    pair_index = {}
    idx = n
    for a in range(n):
        for b in range(a + 1, n):
            pair_index[(a, b)] = idx
            idx += 1
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * target.ambient_rank
            d_i = m.orders[i]
            if d_i:
                row[toff[i] + j] += d_i
            for (a, b), blk in pair_index.items():
                off = toff[blk]
                # c_ab_i * e_j term
                cab = m.table[a][b]
                if cab[i]:
                    row[off + j] += cab[i]
                # -[D(e_a), e_b] and -[e_a, D(e_b)] terms
                if i == a:
                    for k, x in enumerate(m.table[j][b]):
                        if x:
                            row[off + k] -= x
                if i == b:
                    for k, x in enumerate(m.table[a][j]):
                        if x:
                            row[off + k] -= x
            rows.append(row)
    hom = ModuleHom(endo, target, IntMatrix(rows, ncols=target.ambient_rank),
                    check=False)
    sub = hom.kernel()
    basis = sub.basis()
    mats = [tuple(tuple(b[endo_off[i] + j] for j in range(n)) for i in range(n))
            for b in basis]
    k = len(basis)
    table = [[vec_zero(k) for _ in range(k)] for _ in range(k)]
    for s in range(k):
        for t in range(s + 1, k):
            comm = vec_sub(
                tuple(x for row in _compose_matrices(mats[s], mats[t], n) for x in row),
                tuple(x for row in _compose_matrices(mats[t], mats[s], n) for x in row))
            coords = sub.solve(comm)
            if coords is None:
                raise ValidationError(ValidationReport(
                    "derivations", [ValidationIssue("commutator-closure", (s, t), comm)]))
            table[s][t] = tuple(coords)
            table[t][s] = vec_neg(coords)
    module = FpModule.diagonal(sub.invariant_factors, m.base_modulus)
    return DerivationAlgebra(module, table, mats, sub, f"Der({m.name})")


def adjoint_matrix(m: LieAlgebra, v: Sequence[int]) -> tuple:
    """Row-convention matrix of x -> [v, x]."""
    n = m.rank
    return tuple(m.bracket(v, unit_vec(n, i)) for i in range(n))


def inner_q_derivations(m: LieAlgebra, q: int):
    """The quotient by the q-center, as the inner q-derivation algebra.

    Returns (algebra, crossed module): the projection m -> m/Z_q(m) carries
    the bracket action and is a q-crossed module; its kernel is exactly the
    q-center, making the evident short sequence exact.
    """
    zq = q_center(m, q)
    central = Ideal(m, zq)
    ider, proj = quotient_algebra(m, central)
    ider.name = f"IDer({m.name},{q})"
    lifts = proj.section_vectors
    n = m.rank
    constants = [[m.bracket(lift, unit_vec(n, j)) for j in range(n)]
                 for lift in lifts]
    action = LieAction(ider, m, constants, check=True)
    xm = QCrossedModule(proj, action, q)
    return ider, xm


# ---------------------------------------------------------------------------
# direct sums of algebras

def direct_sum_algebras(a: LieAlgebra, b: LieAlgebra, name=None) -> LieAlgebra:
    if a.base_modulus != b.base_modulus:
        raise ValueError("mixed base rings")
    na, nb = a.rank, b.rank
    orders = list(a.orders) + list(b.orders)
    brackets = {}
    for i in range(na):
        for j in range(i + 1, na):
            vec = tuple(a.table[i][j]) + vec_zero(nb)
            if not vec_is_zero(vec):
                brackets[(i, j)] = vec
    for i in range(nb):
        for j in range(i + 1, nb):
            vec = vec_zero(na) + tuple(b.table[i][j])
            if not vec_is_zero(vec):
                brackets[(na + i, na + j)] = vec
    return lie_algebra(orders, brackets, a.base_modulus,
                       name or f"{a.name}+{b.name}")
