"""The coinvariant complex (C_•)_G of a complex with a G-action."""

import logging

from ..errors import ComplexError
from ..group.representations import Representation, coinvariants, induced_on_quotient
from ..lincat.matrices import DEFAULT_DENSE_THRESHOLD, matmul, zeros
from .chains import ChainComplex, check_boundaries

logger = logging.getLogger(__name__)


def coinvariant_complex(
    cx: ChainComplex, dense_threshold: int = DEFAULT_DENSE_THRESHOLD, check: bool = True
) -> ChainComplex:
    """Replace each C_n by (C_n)_G and push d through the projections.

    ``from_parent[n]`` is the projection C_n → (C_n)_G and ``to_parent[n]``
    the section picking one representative chain per class.
    """
    if cx.actions is None or cx.group is None:
        raise ComplexError("Coinvariants need a complex with a G-action")
    quotients = []
    for n, matrices in enumerate(cx.actions):
        rep = Representation(cx.group, cx.field, cx.dimensions[n], matrices)
        quotients.append(coinvariants(rep, dense_threshold))
    boundaries = [zeros((0, quotients[0].dimension), cx.field)]
    for n in range(1, cx.top + 1):
        boundaries.append(matmul(quotients[n - 1].projection, matmul(cx.boundaries[n], quotients[n].section)))
    actions = tuple(
        induced_on_quotient(matrices, q.projection, q.section) for matrices, q in zip(cx.actions, quotients)
    )
    out = ChainComplex(
        cx.field,
        tuple(boundaries),
        group=cx.group,
        actions=actions,
        from_parent=tuple(q.projection for q in quotients),
        to_parent=tuple(q.section for q in quotients),
        truncated=cx.truncated,
        name=f"({cx.name})_G",
        provenance={**cx.provenance, "derived": "coinvariants"},
    )
    logger.debug(f"coinvariant complex of {cx.name}: dims {out.dimensions}")
    if check:
        check_boundaries(out)
    return out
