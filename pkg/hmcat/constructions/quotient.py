"""The quotient category C/G of a free action and its Galois covering."""

import logging
from dataclasses import dataclass, field

from ..errors import ActionError
from ..group.action import GroupAction, validate_action
from ..group.orbits import OrbitData, orbits_transversal
from ..group.representations import Representation, coinvariants
from ..lincat.category import BasisMorphism, LinCat
from ..lincat.functor import LinFunctor
from ..lincat.matrices import Vector, from_dod
from .grading import Grading

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QuotientCategory:
    """C/G with the grading induced by the transversal and the covering C → C/G.

    Basis morphism i of ``category`` is ``keys[i] = (α, s, h)`` with
    h ∈ _{u_β}C_{s·u_α}; its degree is s.
    """

    category: LinCat
    grading: Grading
    projection: LinFunctor
    orbits: OrbitData
    keys: tuple[tuple[int, int, int], ...]
    coinvariant_dimensions: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def transversal(self) -> tuple[int, ...]:
        return self.orbits.transversal

    def hom_dimension_mismatches(self) -> list[tuple[int, int]]:
        """Orbit pairs whose hom dimension differs from the coinvariant count."""
        return [
            (beta, alpha)
            for (beta, alpha), dim in self.coinvariant_dimensions.items()
            if dim != self.category.hom_dimension(beta, alpha)
        ]


def quotient_category(
    a: GroupAction,
    orbits: OrbitData | None = None,
    check_coinvariants: bool = True,
    validate: bool = True,
) -> QuotientCategory:
    """Build C/G on the transversal basis _β(C/G)_α = ⊕_s _{u_β}C_{s·u_α}.

    Raises NonFreeActionError when the action has nontrivial stabilizers.
    """
    if validate:
        validate_action(a).raise_if_invalid(ActionError)
    c, group = a.category, a.group
    orbits = orbits or orbits_transversal(a)
    witness = orbits.require_free(c.objects, group.order)
    transversal = orbits.transversal
    n_orbits = len(transversal)

    keys: list[tuple[int, int, int]] = []
    basis: list[BasisMorphism] = []
    for beta in range(n_orbits):
        for alpha in range(n_orbits):
            u_beta, u_alpha = transversal[beta], transversal[alpha]
            for s in group.elements:
                for h in c.hom(u_beta, a.act_object(s, u_alpha)):
                    keys.append((alpha, s, h))
                    basis.append(BasisMorphism(f"[{c.label(h)}]", alpha, beta))
    index = {key: i for i, key in enumerate(keys)}

    starting_at: list[list[int]] = [[] for _ in range(n_orbits)]
    for i, b in enumerate(basis):
        starting_at[b.source].append(i)

    comp: dict[tuple[int, int], Vector] = {}
    for fi, (alpha, s, hf) in enumerate(keys):
        for gi in starting_at[basis[fi].target]:
            _, t, hg = keys[gi]
            # _{u_γ}(g ∘ t·f)_{ts·u_α}
            value = c.compose({hg: c.field.one}, a.act_basis(t, hf))
            if value:
                ts = group.mul(t, s)
                comp[(gi, fi)] = {index[(alpha, ts, h)]: v for h, v in value.items()}

    identities = tuple(
        {index[(alpha, group.identity, h)]: v for h, v in c.identities[u].items()}
        for alpha, u in enumerate(transversal)
    )
    objects = tuple(f"[{c.objects[u]}]" for u in transversal)
    name = f"{c.name}/{group.name}" if c.name and group.name else ""
    category = LinCat(c.field, objects, tuple(basis), comp, identities, name=name)
    grading = Grading(category, group, tuple(s for _, s, _ in keys))

    # f: s·u_α → r·u_β goes to r⁻¹f in degree r⁻¹s
    images: list[Vector] = []
    for f, b in enumerate(c.basis):
        s, r = witness[b.source], witness[b.target]
        alpha = orbits.orbit_of[b.source]
        r_inv = group.inverse(r)
        degree = group.mul(r_inv, s)
        moved = a.act_basis(r_inv, f)
        images.append({index[(alpha, degree, h)]: v for h, v in moved.items()})
    projection = LinFunctor(c, category, tuple(orbits.orbit_of), tuple(images), name="C→C/G")

    dims = _coinvariant_hom_dimensions(a, orbits) if check_coinvariants else {}
    logger.debug(f"quotient category: {n_orbits} objects, dim {len(keys)}")
    return QuotientCategory(category, grading, projection, orbits, tuple(keys), dims)


def _coinvariant_hom_dimensions(a: GroupAction, orbits: OrbitData) -> dict[tuple[int, int], int]:
    """dim (⊕_{x∈α, y∈β} _yC_x)_G for every pair of orbits."""
    c, group = a.category, a.group
    out: dict[tuple[int, int], int] = {}
    for beta, targets in enumerate(orbits.orbits):
        for alpha, sources in enumerate(orbits.orbits):
            indices = [h for y in targets for x in sources for h in c.hom(y, x)]
            position = {h: k for k, h in enumerate(indices)}
            n = len(indices)
            matrices = []
            for s in group.elements:
                dod: dict[int, dict[int, object]] = {}
                for j, h in enumerate(indices):
                    for i, v in a.act_basis(s, h).items():
                        dod.setdefault(position[i], {})[j] = v
                matrices.append(from_dod(dod, (n, n), c.field))
            rep = Representation(group, c.field, n, tuple(matrices))
            out[(beta, alpha)] = coinvariants(rep).dimension
    return out


def grading_from_transversal(a: GroupAction, orbits: OrbitData | None = None) -> tuple[Grading, tuple[str, ...]]:
    """The grading of C/G fixed by a transversal, reported with that transversal."""
    q = quotient_category(a, orbits, check_coinvariants=False)
    return q.grading, tuple(a.category.objects[u] for u in q.transversal)
