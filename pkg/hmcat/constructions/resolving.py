"""The resolving category M_G(C), its free G-action and the equivalence L onto C."""

import logging
from dataclasses import dataclass

from ..errors import ActionError
from ..group.action import GroupAction, validate_action
from ..lincat.category import BasisMorphism, LinCat
from ..lincat.functor import LinFunctor
from ..lincat.matrices import Vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ResolvingCategory:
    """M_G(C) with objects (s, x) at index s·|C₀| + x.

    Basis morphism i of ``category`` is ``keys[i] = (t, s, h)``: a copy of
    h ∈ _yC_x in the hom space from (s, x) to (t, y).
    """

    category: LinCat
    action: GroupAction
    functor: LinFunctor
    keys: tuple[tuple[int, int, int], ...]

    def object_of(self, s: int, x: int) -> int:
        return s * len(self.functor.target.objects) + x


def resolving_category(a: GroupAction, validate: bool = True) -> ResolvingCategory:
    """M_G(C): objects G × C₀, _{(t,y)}M_{(s,x)} = _yC_x, r·(s, x) = (rs, r·x)."""
    if validate:
        validate_action(a).raise_if_invalid(ActionError)
    c, group = a.category, a.group
    n = len(c.objects)
    objects = tuple(f"({group.labels[s]},{x})" for s in group.elements for x in c.objects)

    keys: list[tuple[int, int, int]] = []
    basis: list[BasisMorphism] = []
    for t in group.elements:
        for y in range(n):
            for s in group.elements:
                for x in range(n):
                    for h in c.hom(y, x):
                        keys.append((t, s, h))
                        basis.append(
                            BasisMorphism(f"{c.label(h)}[{group.labels[t]},{group.labels[s]}]", s * n + x, t * n + y)
                        )
    index = {key: i for i, key in enumerate(keys)}

    starting_at: dict[tuple[int, int], list[int]] = {}
    for i, (_, s, h) in enumerate(keys):
        starting_at.setdefault((s, c.basis[h].source), []).append(i)

    comp: dict[tuple[int, int], Vector] = {}
    for fi, (t, s, hf) in enumerate(keys):
        for gi in starting_at.get((t, c.basis[hf].target), ()):
            r, _, hg = keys[gi]
            value = c.compose_basis(hg, hf)
            if value:
                comp[(gi, fi)] = {index[(r, s, h)]: v for h, v in value.items()}

    identities = tuple(
        {index[(s, s, h)]: v for h, v in c.identities[x].items()} for s in group.elements for x in range(n)
    )
    name = f"M_{group.name}({c.name})" if c.name and group.name else ""
    category = LinCat(c.field, objects, tuple(basis), comp, identities, name=name)

    object_perm = tuple(
        tuple(group.mul(r, s) * n + a.act_object(r, x) for s in group.elements for x in range(n))
        for r in group.elements
    )
    images = tuple(
        tuple(
            {index[(group.mul(r, t), group.mul(r, s), h)]: v for h, v in a.act_basis(r, hf).items()}
            for t, s, hf in keys
        )
        for r in group.elements
    )
    action = GroupAction(group, category, object_perm, images)

    functor = LinFunctor(
        category,
        c,
        tuple(x for _ in group.elements for x in range(n)),
        tuple({h: c.field.one} for _, _, h in keys),
        name="L",
    )
    logger.debug(f"resolving category: {len(objects)} objects, dim {len(keys)}, free action {action.is_free}")
    return ResolvingCategory(category, action, functor, tuple(keys))
