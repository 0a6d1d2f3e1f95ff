"""Brute-force oracles over small finite instances.

These deliberately avoid the main presentation pipeline: products are built
by instantiating the defining relation families over *all* module elements
(not just generators) inside the universal bilinear stage, closing the
relation subgroup by enumeration, and reading invariant factors off an
element-order census. Agreement with the Smith-normal-form pipeline on every
small instance is what grounds the generator-only instantiation used there.
"""

from __future__ import annotations

import itertools
from math import gcd, lcm
from typing import Iterable, Sequence

from lieq._kernel import hnf_rows
from lieq.errors import TooLarge
from lieq.exactlin import FpModule
from lieq.liealg import LieAlgebra

SIZE_CAP = 4096
GAMMA_CAP = 16


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


class FiniteEnumeration:
    """A finite module +Z/o_i with explicit element tuples and arithmetic."""

    def __init__(self, orders: Sequence[int]):
        orders = tuple(int(o) for o in orders)
        if any(o < 1 for o in orders):
            raise ValueError("finite enumeration needs all orders >= 1")
        if _prod(orders) > SIZE_CAP:
            raise TooLarge(f"module of order {_prod(orders)} exceeds {SIZE_CAP}")
        self.orders = orders
        self.size = _prod(orders)

    def elements(self):
        return itertools.product(*[range(o) for o in self.orders])

    def reduce(self, v) -> tuple:
        return tuple(x % o for x, o in zip(v, self.orders))

    def add(self, a, b) -> tuple:
        return tuple((x + y) % o for x, y, o in zip(a, b, self.orders))

    def scale(self, c, a) -> tuple:
        return tuple((c * x) % o for x, o in zip(a, self.orders))

    def zero(self) -> tuple:
        return (0,) * len(self.orders)


def subgroup_closure(ambient: FiniteEnumeration, gens: Iterable[Sequence[int]]) -> set:
    """All sums of the given elements, by breadth-first closure."""
    gens = sorted({ambient.reduce(g) for g in gens} - {ambient.zero()})
    closed = {ambient.zero()}
    queue = [ambient.zero()]
    while queue:
        x = queue.pop()
        for g in gens:
            y = ambient.add(x, g)
            if y not in closed:
                closed.add(y)
                queue.append(y)
    return closed


def _factorize(n: int) -> dict:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _invariants_from_census(ambient: FiniteEnumeration, sub: set) -> tuple:
    """Invariant factors of ambient/sub from counting p^k-torsion elements.

    For each prime p, the count of classes killed by p^k equals
    p^(sum min(lambda_i, k)); successive differences give the conjugate
    partition of the p-part, which assembles into the divisibility chain.
    """
    qsize = ambient.size // len(sub)
    if qsize == 1:
        return ()
    partitions = {}
    for p in _factorize(qsize):
        logs = [0]
        k = 1
        while True:
            count = sum(1 for a in ambient.elements()
                        if ambient.scale(p ** k, a) in sub) // len(sub)
            s_k = 0
            c = count
            while c > 1:
                c //= p
                s_k += 1
            logs.append(s_k)
            if logs[-1] == logs[-2]:
                logs.pop()
                break
            k += 1
        conj = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
        lam = []
        i = 1
        while conj and i <= conj[0]:
            lam.append(sum(1 for m in conj if m >= i))
            i += 1
        partitions[p] = sorted(lam, reverse=True)
    width = max(len(v) for v in partitions.values())
    factors = []
    for j in range(width):
        d = 1
        for p, lam in partitions.items():
            if j < len(lam):
                d *= p ** lam[j]
        factors.append(d)
    return tuple(sorted(factors))


def brute_module_quotient(ambient_orders: Sequence[int],
                          relations: Iterable[Sequence[int]]) -> tuple:
    """Invariant factors of a finite module modulo enumerated relations."""
    ambient = FiniteEnumeration(ambient_orders)
    sub = subgroup_closure(ambient, relations)
    return _invariants_from_census(ambient, sub)


# ---------------------------------------------------------------------------
# brute product presentations

class BruteProduct:
    """Element-level model of a q-tensor/exterior square of a finite algebra.

    The ambient is the bilinear stage (tensor square of the module, plus one
    brace block for q >= 1); the remaining relation families are instantiated
    over every element pair/triple and closed by enumeration.
    """

    def __init__(self, g: LieAlgebra, q: int, kind: str):
        if any(o == 0 for o in g.orders) or g.rank and _prod(g.orders) > SIZE_CAP:
            raise TooLarge("brute products need a small finite algebra")
        self.g = g
        self.q = q
        self.kind = kind
        self.n = g.rank
        self.gmod = FiniteEnumeration(g.orders if g.rank else [])
        self.pure_orders = [gcd(g.orders[i], g.orders[j])
                            for i in range(self.n) for j in range(self.n)]
        self.brace = q >= 1
        orders = self.pure_orders + (list(g.orders) if self.brace else [])
        self.ambient = FiniteEnumeration(orders)
        self.sub = subgroup_closure(self.ambient, self._relation_instances())

    def tensor_elt(self, x, y) -> tuple:
        n = self.n
        vec = [(x[i] * y[j]) % self.pure_orders[i * n + j] if self.pure_orders[i * n + j] else 0
               for i in range(n) for j in range(n)]
        if self.brace:
            vec += [0] * n
        return tuple(vec)

    def brace_elt(self, x) -> tuple:
        vec = [0] * (self.n * self.n) + list(x)
        return self.ambient.reduce(tuple(vec))

    def _bracket(self, x, y) -> tuple:
        return self.gmod.reduce(self.g.bracket(x, y))

    def _relation_instances(self):
        g, n, q = self.g, self.n, self.q
        add, neg = self.ambient.add, (lambda v: self.ambient.scale(-1, v))
        elems = list(self.gmod.elements())
        seen = set()
        for x in elems:
            for xp in elems:
                bxxp = self._bracket(x, xp)
                for y in elems:
                    vec = add(self.tensor_elt(bxxp, y),
                              add(neg(self.tensor_elt(x, self._bracket(xp, y))),
                                  self.tensor_elt(xp, self._bracket(x, y))))
                    seen.add(vec)
        for x in elems:
            for y in elems:
                byx = self._bracket(y, x)
                for yp in elems:
                    vec = add(self.tensor_elt(x, self._bracket(y, yp)),
                              add(neg(self.tensor_elt(self._bracket(yp, x), y)),
                                  self.tensor_elt(byx, yp)))
                    seen.add(vec)
        if self.brace:
            for x in elems:
                for y in elems:
                    vec = add(self.brace_elt(self._bracket(x, y)),
                              self.ambient.scale(-q, self.tensor_elt(x, y)))
                    seen.add(vec)
        if self.kind == "exterior":
            for x in elems:
                seen.add(self.tensor_elt(x, x))
        else:
            # alternating closure of the symbol bracket: brackets tensored
            # with themselves die even in the tensor kind
            for x in elems:
                for y in elems:
                    b = self._bracket(x, y)
                    seen.add(self.tensor_elt(b, b))
        seen.discard(self.ambient.zero())
        return seen

    def invariant_factors(self) -> tuple:
        return _invariants_from_census(self.ambient, self.sub)

    def is_zero(self, vec) -> bool:
        return self.ambient.reduce(vec) in self.sub


def brute_q_square(g: LieAlgebra, q: int, kind: str) -> tuple:
    """Invariant factors of the q-square of a small finite algebra."""
    return BruteProduct(g, q, kind).invariant_factors()


def brute_center(g: LieAlgebra, q: int, kind: str,
                 include_brace: bool = True) -> list:
    """Elements annihilating everything in the brute product.

    ``kind`` picks tensor or exterior; ``include_brace`` False gives the
    Ellis variants. Conditions are evaluated by direct membership over all
    elements.
    """
    prod = BruteProduct(g, q, kind)
    elems = list(prod.gmod.elements())
    out = []
    for x in elems:
        if include_brace and prod.brace and not prod.is_zero(prod.brace_elt(x)):
            continue
        if all(prod.is_zero(prod.tensor_elt(x, y)) for y in elems):
            out.append(x)
    return out


# ---------------------------------------------------------------------------
# brute quadratic functor

def brute_gamma(orders: Sequence[int]) -> tuple:
    """Invariant factors of the quadratic functor of a finite module.

    One integer generator per module element, the three defining relation
    families instantiated over all tuples, scalars running over
    0..exponent^2 (the relations are quadratic polynomials in the scalar
    with period dividing the exponent, so this range is generating; the
    closed form cross-checks it).
    """
    A = FiniteEnumeration(orders)
    if A.size > GAMMA_CAP:
        raise TooLarge(f"module of order {A.size} exceeds {GAMMA_CAP}")
    elems = list(A.elements())
    index = {e: i for i, e in enumerate(elems)}
    nsym = len(elems)
    exponent = lcm(*A.orders) if A.orders else 1
    cap = exponent * exponent

    def rows():
        for a in elems:
            ia = index[a]
            for lam in range(cap + 1):
                row = [0] * nsym
                row[index[A.scale(lam, a)]] += 1
                row[ia] -= lam * lam
                yield row
        for a in elems:
            for b in elems:
                ab = A.add(a, b)
                for c in elems:
                    row = [0] * nsym
                    row[index[A.add(ab, c)]] += 1
                    row[index[a]] += 1
                    row[index[b]] += 1
                    row[index[c]] += 1
                    row[index[ab]] -= 1
                    row[index[A.add(a, c)]] -= 1
                    row[index[A.add(b, c)]] -= 1
                    yield row
        for a in elems:
            for b in elems:
                ab = A.add(a, b)
                for lam in range(cap + 1):
                    la = A.scale(lam, a)
                    row = [0] * nsym
                    row[index[A.add(la, b)]] += 1
                    row[index[a]] += lam
                    row[index[b]] += lam - 1
                    row[index[ab]] -= lam
                    row[index[la]] -= 1
                    yield row

    reduced = hnf_rows(rows(), nsym)
    return FpModule(nsym, reduced).invariant_factors
