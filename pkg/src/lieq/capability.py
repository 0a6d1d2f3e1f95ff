"""The six centers of an algebra at a given q, and the capability verdicts.

All centers are kernels of "multiply into the product" maps computed through
the symbol presentations: the tensor and exterior centers additionally
require the brace coordinate to vanish, their Ellis variants drop it. The
capability criteria are decided from the exterior centers; each verdict
carries an applicability flag because the underlying equivalences are proved
over rings without q-torsion (q = 0 is the classical, always-covered case).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from lieq.exactlin import (
    IntMatrix,
    ModuleHom,
    Submodule,
    direct_sum,
    is_free_over,
    lambda_q_modulus,
    quotient,
    unit_vec,
)
from lieq.liealg import LieAlgebra, center as algebra_center, hash_product, q_center
from lieq.qtensor import QProduct, q_exterior_product, q_tensor_product


def lambda_q_torsion_free(base_modulus: int, q: int) -> bool:
    """Whether q annihilates only zero in the base ring.

    Z is torsion-free for every q; Z/m exactly when gcd(q, m) = 1.
    """
    if base_modulus == 0:
        return True
    return gcd(q, base_modulus) == 1


def capability_theorem_applicable(base_modulus: int, q: int) -> bool:
    """Whether the capability criteria are theorem-backed at this (ring, q).

    q = 0 is the classical capability statement over any base; for q >= 1
    the proof chain needs the base ring q-torsion-free.
    """
    return q == 0 or lambda_q_torsion_free(base_modulus, q)


def _annihilator_kernel(prod: QProduct, include_brace: bool) -> Submodule:
    """Kernel of x -> (x*e_1, ..., x*e_n [, {x}]) through a product."""
    g = prod.algebra
    n = g.rank
    blocks = n + (1 if include_brace and prod.has_braces else 0)
    if blocks == 0:
        return Submodule(g.module, [])
    target, offsets = direct_sum([prod.module] * blocks)
    rows = []
    for a in range(n):
        coords = prod.ideal.coords(unit_vec(n, a))
        row = [0] * target.ambient_rank
        for j in range(n):
            vec = prod.tensor_of(coords, unit_vec(n, j))
            for k, x in enumerate(vec):
                if x:
                    row[offsets[j] + k] += x
        if include_brace and prod.has_braces:
            vec = prod.brace_of(coords)
            for k, x in enumerate(vec):
                if x:
                    row[offsets[n] + k] += x
        rows.append(row)
    hom = ModuleHom(g.module, target, IntMatrix(rows, ncols=target.ambient_rank),
                    check=False)
    return hom.kernel()


def tensor_center(g: LieAlgebra, q: int) -> Submodule:
    """Elements with vanishing brace and vanishing tensors with everything."""
    return _annihilator_kernel(q_tensor_product(g, None, q), include_brace=True)


def exterior_center(g: LieAlgebra, q: int) -> Submodule:
    """Elements with vanishing brace and vanishing wedges with everything."""
    return _annihilator_kernel(q_exterior_product(g, None, q), include_brace=True)


def ellis_centers(g: LieAlgebra, q: int):
    """The brace-free variants: (tensor-sense, exterior-sense)."""
    zt = _annihilator_kernel(q_tensor_product(g, None, q), include_brace=False)
    ze = _annihilator_kernel(q_exterior_product(g, None, q), include_brace=False)
    return zt, ze


@dataclass
class Verdict:
    value: bool
    criterion: str
    theorem_backed: bool

    def to_json_dict(self):
        return {"value": self.value, "criterion": self.criterion,
                "theorem_backed": self.theorem_backed}


def is_q_capable(g: LieAlgebra, q: int) -> Verdict:
    """Criterion: the q-exterior center vanishes.

    The equivalence with being a quotient by a q-center is theorem-backed
    when the base ring has no q-torsion (or q = 0); otherwise the verdict
    reports the criterion value only.
    """
    return Verdict(
        value=exterior_center(g, q).is_zero(),
        criterion="exterior-center-trivial",
        theorem_backed=capability_theorem_applicable(g.base_modulus, q),
    )


def is_strongly_q_capable(g: LieAlgebra, q: int) -> Verdict:
    """Criterion: the brace-free exterior center vanishes."""
    _, ze = ellis_centers(g, q)
    return Verdict(
        value=ze.is_zero(),
        criterion="ellis-exterior-center-trivial",
        theorem_backed=capability_theorem_applicable(g.base_modulus, q),
    )


@dataclass
class CoincidenceReport:
    """Tensor and exterior centers coincide under the freeness hypothesis.

    The coincidence argument runs through the brace section of the abelian
    decomposition, which only exists for q >= 1; at q = 0 both centers are
    recorded without an assertion (g = Z is a genuine counterexample there:
    the tensor center vanishes while the exterior center is everything).
    """

    hypothesis_met: bool
    braces_available: bool
    equal: Optional[bool]
    tensor_center_factors: tuple
    exterior_center_factors: tuple

    @property
    def asserted(self) -> bool:
        return self.hypothesis_met and self.braces_available

    @property
    def ok(self) -> bool:
        return bool(self.equal) if self.asserted else True


def coincidence_check(g: LieAlgebra, q: int) -> CoincidenceReport:
    hp = hash_product(g, None, q)
    base, _ = quotient(g.module, hp.sub)
    k = lambda_q_modulus(g.base_modulus, q)
    hyp = is_free_over(base, k)
    zt = tensor_center(g, q)
    ze = exterior_center(g, q)
    return CoincidenceReport(
        hypothesis_met=hyp,
        braces_available=q >= 1,
        equal=zt.same(ze) if hyp else None,
        tensor_center_factors=zt.invariant_factors,
        exterior_center_factors=ze.invariant_factors,
    )


@dataclass
class CenterReport:
    """All six centers of one algebra at one q, with verdicts and flags."""

    algebra: str
    ring: str
    q: int
    center: Submodule
    q_center: Submodule
    tensor_center: Submodule
    exterior_center: Submodule
    ellis_tensor_center: Submodule
    ellis_exterior_center: Submodule
    q_capable: Verdict
    strongly_q_capable: Verdict
    flags: dict

    def inclusion_failures(self) -> list:
        """The nesting expected of the six centers; empty when all hold."""
        chains = [
            ("tensor_center <= exterior_center",
             self.exterior_center, self.tensor_center),
            ("exterior_center <= q_center", self.q_center, self.exterior_center),
            ("q_center <= center", self.center, self.q_center),
            ("tensor_center <= ellis_tensor_center",
             self.ellis_tensor_center, self.tensor_center),
            ("exterior_center <= ellis_exterior_center",
             self.ellis_exterior_center, self.exterior_center),
            ("ellis_tensor_center <= ellis_exterior_center",
             self.ellis_exterior_center, self.ellis_tensor_center),
            ("ellis_exterior_center <= center",
             self.center, self.ellis_exterior_center),
        ]
        return [label for label, big, small in chains if not big.contains(small)]

    def _center_dict(self, sub: Submodule) -> dict:
        return {
            "invariant_factors": list(sub.invariant_factors),
            "generators": [list(b) for b in sub.basis()],
        }

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "centers",
            "algebra": self.algebra,
            "ring": self.ring,
            "q": self.q,
            "centers": {
                "center": self._center_dict(self.center),
                "q_center": self._center_dict(self.q_center),
                "tensor_center": self._center_dict(self.tensor_center),
                "exterior_center": self._center_dict(self.exterior_center),
                "ellis_tensor_center": self._center_dict(self.ellis_tensor_center),
                "ellis_exterior_center": self._center_dict(self.ellis_exterior_center),
            },
            "verdicts": {
                "q_capable": self.q_capable.to_json_dict(),
                "strongly_q_capable": self.strongly_q_capable.to_json_dict(),
            },
            "flags": dict(self.flags),
        }


def center_report(g: LieAlgebra, q: int) -> CenterReport:
    zt, ze_ellis = ellis_centers(g, q)
    zw = exterior_center(g, q)
    zo = tensor_center(g, q)
    ring = "Z" if not g.base_modulus else f"Z/{g.base_modulus}"
    torsion_free = lambda_q_torsion_free(g.base_modulus, q)
    return CenterReport(
        algebra=g.name,
        ring=ring,
        q=q,
        center=algebra_center(g),
        q_center=q_center(g, q),
        tensor_center=zo,
        exterior_center=zw,
        ellis_tensor_center=zt,
        ellis_exterior_center=ze_ellis,
        q_capable=Verdict(zw.is_zero(), "exterior-center-trivial",
                          capability_theorem_applicable(g.base_modulus, q)),
        strongly_q_capable=Verdict(ze_ellis.is_zero(),
                                   "ellis-exterior-center-trivial",
                                   capability_theorem_applicable(g.base_modulus, q)),
        flags={
            "lambda_q_torsion_free": torsion_free,
            "capability_theorem_backed": capability_theorem_applicable(
                g.base_modulus, q),
        },
    )
