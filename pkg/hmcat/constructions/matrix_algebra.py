"""M_G(Λ): |G|×|G| matrices over Λ with the action r·(λE_{t,s}) = (r·λ)E_{rt,rs}."""

from dataclasses import dataclass

from ..errors import ActionError
from ..group.action import AlgebraAction, validate_algebra_action
from ..lincat.algebra import AlgebraView
from ..lincat.matrices import Vector


@dataclass(frozen=True, eq=False)
class MatrixSkewAlgebra:
    """Basis λ_i E_{t,s} at index (t·|G| + s)·dim Λ + i.

    ``idempotents`` are the diagonal units E_{s,s}; ``orbit`` lists the
    index of r·E_{1,1} for every r, and the action on them is free when
    all are distinct.
    """

    algebra: AlgebraView
    action: AlgebraAction
    idempotents: tuple[Vector, ...]
    orbit: tuple[int, ...]

    @property
    def acts_freely_on_idempotents(self) -> bool:
        return len(set(self.orbit)) == len(self.orbit)


def matrix_skew_algebra(action: AlgebraAction, validate: bool = True) -> MatrixSkewAlgebra:
    if validate:
        validate_algebra_action(action).raise_if_invalid(ActionError)
    lam, group = action.algebra, action.group
    g, d = group.order, lam.dimension

    def at(t: int, s: int, i: int) -> int:
        return (t * g + s) * d + i

    labels = tuple(
        f"{lam.labels[i]}E{group.labels[t]},{group.labels[s]}" for t in group.elements for s in group.elements for i in range(d)
    )
    table: dict[tuple[int, int], Vector] = {}
    for (i, j), value in lam.table.items():
        if not value:
            continue
        for t in group.elements:
            for s in group.elements:
                for r in group.elements:
                    table[(at(t, s, i), at(s, r, j))] = {at(t, r, h): v for h, v in value.items()}
    unit = {at(s, s, i): v for s in group.elements for i, v in lam.unit.items()}
    name = f"M_{group.name}({lam.name})" if lam.name and group.name else ""
    algebra = AlgebraView(lam.field, labels, table, unit, name=name)

    images = tuple(
        tuple(
            {at(group.mul(r, t), group.mul(r, s), h): v for h, v in action.images[r][i].items()}
            for t in group.elements
            for s in group.elements
            for i in range(d)
        )
        for r in group.elements
    )
    matrix_action = AlgebraAction(group, algebra, images)

    idempotents = tuple({at(s, s, i): v for i, v in lam.unit.items()} for s in group.elements)
    orbit = []
    for r in group.elements:
        moved = matrix_action.act(r, idempotents[0])
        orbit.append(next((s for s, e in enumerate(idempotents) if e == moved), -1))
    return MatrixSkewAlgebra(algebra, matrix_action, idempotents, tuple(orbit))
