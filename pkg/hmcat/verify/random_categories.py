"""Seeded random G-categories for randomized verification.

Categories are radical-square-zero quivers: identities plus arrows, every
composite of two arrows zero, so associativity holds by construction. A
cyclic group C2 or C3 acts by permuting objects and sending arrows to
signed arrows, with signs chosen so the generator has the group's order.
"""

import logging
import random
from itertools import product
from math import prod

from ..group.action import GroupAction
from ..group.finite_group import cyclic_group
from ..io import Document
from ..lincat.category import LinCat
from ..lincat.matrices import Vector
from ..lincat.scalars import Field

logger = logging.getLogger(__name__)

MAX_OBJECTS = 3
MAX_ARROWS = 2


def _object_permutation(rng: random.Random, n: int, order: int) -> list[int]:
    """A permutation of range(n) whose order divides ``order``."""
    perm = list(range(n))
    if order == 2 and n >= 2 and rng.random() < 0.6:
        x, y = rng.sample(range(n), 2)
        perm[x], perm[y] = y, x
    elif order == 3 and n == 3 and rng.random() < 0.6:
        perm = [1, 2, 0]
    return perm


def _pair_orbits(perm: list[int]) -> list[list[tuple[int, int]]]:
    """Orbits of (target, source) pairs under the object permutation."""
    seen: set[tuple[int, int]] = set()
    out = []
    for pair in product(range(len(perm)), repeat=2):
        if pair in seen:
            continue
        orbit = [pair]
        y, x = perm[pair[0]], perm[pair[1]]
        while (y, x) != pair:
            orbit.append((y, x))
            y, x = perm[y], perm[x]
        seen.update(orbit)
        out.append(orbit)
    return out


def random_document(rng: random.Random, field: Field, index: int = 0) -> Document:
    """One random category with a C2 or C3 action."""
    order = rng.choice((2, 3))
    group = cyclic_group(order)
    n = rng.randint(1, MAX_OBJECTS)
    objects = [f"x{i}" for i in range(n)]
    perm = _object_permutation(rng, n, order)

    hom: dict[tuple[str, str], list[str]] = {(x, x): [f"1{x}"] for x in objects}
    # arrow label -> (image label, sign) under the generator
    moves: dict[str, tuple[str, int]] = {}
    for orbit in _pair_orbits(perm):
        y, x = orbit[0]
        count = rng.randint(0, 1 if x == y else MAX_ARROWS)
        if not count:
            continue
        for t, s in orbit:
            hom.setdefault((objects[t], objects[s]), []).extend(
                f"a{k}_{objects[t]}{objects[s]}" for k in range(count)
            )
        for k in range(count):
            signs = [rng.choice((1, -1)) for _ in orbit]
            # signs round an orbit multiply to 1 when m / len(orbit) is odd
            if (order // len(orbit)) % 2 == 1:
                signs[-1] *= prod(signs)
            for step, (t, s) in enumerate(orbit):
                nt, ns = orbit[(step + 1) % len(orbit)]
                moves[f"a{k}_{objects[t]}{objects[s]}"] = (f"a{k}_{objects[nt]}{objects[ns]}", signs[step])
        if len(orbit) == 1 and order == 2 and count == 2 and rng.random() < 0.5:
            first, second = (f"a{k}_{objects[y]}{objects[x]}" for k in range(2))
            moves[first], moves[second] = (second, moves[first][1]), (first, moves[first][1])

    comp: dict[tuple[str, str], dict[str, int]] = {}
    for (t, s), labels in hom.items():
        for label in labels:
            comp[(f"1{t}", label)] = {label: 1}
            comp[(label, f"1{s}")] = {label: 1}
    name = f"random-{index}"
    c = LinCat.build(field, objects, hom, comp, {x: {f"1{x}": 1} for x in objects}, name=name)

    images: list[Vector] = []
    for i in range(c.dimension):
        label = c.label(i)
        if label in moves:
            target, sign = moves[label]
            images.append({c.label_index[target]: field(sign)})
        else:
            source = c.basis[i].source
            images.append({c.label_index[f"1{objects[perm[source]]}"]: field.one})
    action = GroupAction.from_generators(group, c, {1: (perm, images)})
    logger.debug(f"{name}: {n} objects, dim {c.dimension}, {group.name} permuting objects by {perm}")
    return Document(c, group, action, name=name)


def random_documents(seed: int, count: int, field: Field) -> list[Document]:
    """``count`` random documents, reproducible from ``seed``."""
    rng = random.Random(seed)
    return [random_document(rng, field, i) for i in range(count)]
