"""Orbits of the object action, transversals and freeness witnesses."""

import logging
from dataclasses import dataclass
from typing import Sequence

from ..errors import NonFreeActionError, TransversalError
from .action import GroupAction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitData:
    """Orbits with a transversal T.

    ``representative[x]`` is u(x) ∈ T. When the action is free,
    ``witness[x]`` is the unique s with x = s·u(x).
    """

    orbits: tuple[tuple[int, ...], ...]
    transversal: tuple[int, ...]
    representative: tuple[int, ...]
    orbit_of: tuple[int, ...]
    free: bool
    witness: tuple[int, ...] | None

    def require_free(self, object_names: Sequence[str], group_order: int) -> tuple[int, ...]:
        """The witness map, or NonFreeActionError naming a short orbit."""
        if self.witness is None:
            bad = next((o for o in self.orbits if len(o) < group_order), self.orbits[0] if self.orbits else ())
            raise NonFreeActionError(tuple(object_names[x] for x in bad))
        return self.witness

    def anchor(self, group, x: int) -> int:
        """The unique r with r·x ∈ T (free actions only)."""
        if self.witness is None:
            raise TransversalError("Anchors exist only for free actions")
        return group.inverse(self.witness[x])

    def to_dict(self, object_names: Sequence[str]) -> dict:
        return {
            "orbits": [[object_names[x] for x in o] for o in self.orbits],
            "transversal": [object_names[x] for x in self.transversal],
            "free": self.free,
        }


def orbits_transversal(a: GroupAction, preferred: Sequence[str] | Sequence[int] | None = None) -> OrbitData:
    """Orbits of G on objects with a transversal.

    A preferred object is used as the representative of its orbit unless an
    earlier preferred object already covers that orbit; other orbits take
    their lowest-index object.
    """
    c, group = a.category, a.group
    n = len(c.objects)
    orbit_of = [-1] * n
    orbits: list[tuple[int, ...]] = []
    for x in range(n):
        if orbit_of[x] >= 0:
            continue
        members = sorted({a.act_object(s, x) for s in group.elements})
        for m in members:
            orbit_of[m] = len(orbits)
        orbits.append(tuple(members))

    chosen = [o[0] for o in orbits]
    taken = [False] * len(orbits)
    for p in preferred or ():
        if isinstance(p, str) and p not in c.object_index:
            raise TransversalError(f"Unknown object {p!r} in preferred transversal")
        x = c.object_index[p] if isinstance(p, str) else p
        k = orbit_of[x]
        if not taken[k]:
            chosen[k], taken[k] = x, True
    transversal = tuple(chosen)

    representative = tuple(transversal[orbit_of[x]] for x in range(n))
    free = a.is_free
    witness = None
    if free:
        w = [0] * n
        for x in range(n):
            u = representative[x]
            matches = [s for s in group.elements if a.act_object(s, u) == x]
            w[x] = matches[0]
        witness = tuple(w)
    logger.debug(f"{len(orbits)} orbits, transversal {[c.objects[u] for u in transversal]}, free={free}")
    return OrbitData(tuple(orbits), transversal, representative, tuple(orbit_of), free, witness)


def check_transversal(a: GroupAction, objects: Sequence[int]) -> None:
    """Raise TransversalError unless ``objects`` meets every orbit exactly once."""
    data = orbits_transversal(a)
    hits = [0] * len(data.orbits)
    for x in objects:
        hits[data.orbit_of[x]] += 1
    if any(h != 1 for h in hits):
        raise TransversalError("Objects do not meet every orbit exactly once")
