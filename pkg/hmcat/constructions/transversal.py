"""The full subcategory C_T[G] of C[G] on a transversal T."""

import logging
from dataclasses import dataclass

from ..errors import FunctorError, TransversalError
from ..group.orbits import OrbitData
from ..lincat.algebra import full_subcategory
from ..lincat.category import LinCat
from ..lincat.functor import IsoWitness, LinFunctor, validate_functor
from ..lincat.validation import ValidationReport
from .grading import Grading
from .quotient import QuotientCategory, quotient_category
from .skew import SkewCategory, orbit_isomorphisms

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TransversalSubcategory:
    """C_T[G] with its inclusion into C[G].

    ``witnesses`` are the orbit isomorphisms t·u ≅ u that make the inclusion
    dense. For free actions ``quotient`` is C/G on the same transversal and
    ``isomorphism`` is the homogeneous functor C_T[G] → C/G.
    """

    category: LinCat
    grading: Grading
    inclusion: LinFunctor
    witnesses: tuple[IsoWitness, ...]
    keys: tuple[tuple[int, int, int], ...]
    quotient: QuotientCategory | None = None
    isomorphism: LinFunctor | None = None

    @property
    def is_equivalence(self) -> bool:
        return self.inclusion.is_full and self.inclusion.is_faithful and self.inclusion.is_dense(self.witnesses)


def transversal_subcategory(skew: SkewCategory, orbits: OrbitData) -> TransversalSubcategory:
    a = skew.action
    transversal = orbits.transversal
    for k, u in enumerate(transversal):
        if orbits.orbit_of[u] != k:
            raise TransversalError("Transversal does not list one object per orbit in orbit order")
    group = a.group
    c = skew.category
    name = f"{a.category.name}_T[{group.name}]" if a.category.name and group.name else ""
    sub, inclusion = full_subcategory(c, transversal, name=name)
    kept = [i for i, b in enumerate(c.basis) if b.source in transversal and b.target in transversal]
    keys = tuple(skew.keys[i] for i in kept)
    grading = Grading(sub, group, tuple(skew.grading.degree[i] for i in kept))

    position = {u: k for k, u in enumerate(transversal)}
    witnesses = []
    for iso in orbit_isomorphisms(skew):
        if iso.source in position and iso.target not in position:
            witnesses.append(IsoWitness(iso.target, position[iso.source], iso.forward, iso.backward))

    quotient = isomorphism = None
    if orbits.free:
        quotient = quotient_category(a, orbits, check_coinvariants=False, validate=False)
        q_index = {key: i for i, key in enumerate(quotient.keys)}
        images = tuple({q_index[(position[x], s, h)]: c.field.one} for x, s, h in keys)
        isomorphism = LinFunctor(sub, quotient.category, tuple(range(len(transversal))), images, name="C_T[G]≅C/G")
    logger.debug(f"transversal subcategory on {[a.category.objects[u] for u in transversal]}: dim {sub.dimension}")
    return TransversalSubcategory(sub, grading, inclusion, tuple(witnesses), keys, quotient, isomorphism)


def check_homogeneous_isomorphism(ts: TransversalSubcategory) -> ValidationReport:
    """The functor C_T[G] → C/G is a bijection on bases preserving degree and structure constants."""
    if ts.isomorphism is None or ts.quotient is None:
        raise FunctorError("No homogeneous isomorphism: the action is not free")
    f = ts.isomorphism
    report = validate_functor(f)
    images = [next(iter(v)) for v in f.images]
    if sorted(images) != list(range(f.target.dimension)):
        report.add("bijective", "basis images are not a permutation of the C/G basis")
    for i, h in enumerate(images):
        if ts.grading.degree[i] != ts.quotient.grading.degree[h]:
            report.add("homogeneous", f"{f.source.label(i)} changes degree", f.source.label(i))
    return report
