"""The quantum Minkowski coordinate algebra.

Generators x_0..x_3 satisfy the rows of (R - 1)(x (x) x - Z x + T) = 0.
The algebra is realized as a degree-truncated quotient; a deformation has
the classical size exactly when the basis profile matches the commutative
monomial counts, which is what pbw_check tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .exact import Mat
from .instance import PoincareInstance
from .qalgebra import NCPoly, TruncatedQuotient, build_quotient

__all__ = [
    "mink_relations", "MinkowskiAlgebra", "make_minkowski",
    "mink_star", "pbw_check", "expected_profile", "star_closed",
]


def mink_relations(inst: PoincareInstance):
    """The defining relations, one NCPoly per nonzero row."""
    rm1 = inst.R - Mat.identity(16)
    rz = rm1 * inst.Z
    rt = rm1 * inst.T
    rels = []
    for row in range(16):
        terms = {}
        for k in range(4):
            for l in range(4):
                c = rm1[row, 4 * k + l]
                if c:
                    terms[(k, l)] = c
        for m in range(4):
            c = rz[row, m]
            if c:
                terms[(m,)] = -c
        c = rt[row, 0]
        if c:
            terms[()] = c
        p = NCPoly(terms)
        if not p.is_zero():
            rels.append(p)
    return rels


@dataclass(eq=False)
class MinkowskiAlgebra:
    instance: PoincareInstance
    quotient: TruncatedQuotient
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def cap(self) -> int:
        return self.quotient.cap

    def normal_form(self, p: NCPoly) -> NCPoly:
        return self.quotient.normal_form(p)

    def basis_upto(self, degree: int):
        return self.quotient.basis_upto(degree)

    def dimension_profile(self):
        return self.quotient.dimension_profile()


def make_minkowski(inst: PoincareInstance, cap: int = 4) -> MinkowskiAlgebra:
    return MinkowskiAlgebra(inst, build_quotient(4, mink_relations(inst), cap))


def mink_star(p: NCPoly) -> NCPoly:
    """Coordinate star: generators are self-adjoint, words reverse."""
    return p.star()


def expected_profile(n: int):
    """Commutative monomial counts in four variables, degree by degree."""
    return [comb(d + 3, 3) for d in range(n + 1)]


def pbw_check(alg: MinkowskiAlgebra, n: int):
    """Compare the basis profile of degrees 0..n to the classical counts.

    Returns (ok, profile).  A mismatch is a statement about the instance
    data, not an engine failure.
    """
    profile = alg.dimension_profile()[:n + 1]
    return profile == expected_profile(min(n, alg.cap)), profile


def star_closed(alg: MinkowskiAlgebra) -> bool:
    """Whether the relation ideal is stable under the star map."""
    return all(alg.normal_form(mink_star(r)).is_zero()
               for r in alg.quotient.relation_set)
