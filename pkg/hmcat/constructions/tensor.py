"""Diagonal actions on tensor products and the trivial G-category k."""

from ..errors import ActionError
from ..group.action import GroupAction
from ..lincat.algebra import field_algebra, single_object_category, tensor_product
from ..lincat.category import LinCat
from ..lincat.matrices import tensor_expand
from ..lincat.scalars import Field


def trivial_category(field: Field) -> LinCat:
    """k₁: one object with endomorphisms k."""
    return single_object_category(field_algebra(field), object_name="*")


def tensor_action(a: GroupAction, b: GroupAction) -> GroupAction:
    """G acting on C ⊗ D through s·(f ⊗ g) = s·f ⊗ s·g."""
    if a.group is not b.group and a.group.table != b.group.table:
        raise ActionError("Diagonal action needs both factors acted on by the same group")
    c, d = a.category, b.category
    product = tensor_product(c, d)
    pairs = product.metadata["factor_pairs"]
    index = {pair: k for k, pair in enumerate(pairs)}
    nd = len(d.objects)
    one = c.field.one
    object_perm = tuple(
        tuple(a.act_object(s, x) * nd + b.act_object(s, y) for x in range(len(c.objects)) for y in range(nd))
        for s in a.group.elements
    )
    images = tuple(
        tuple(
            {index[key]: v for key, v in tensor_expand([a.act_basis(s, i), b.act_basis(s, j)], one).items()}
            for i, j in pairs
        )
        for s in a.group.elements
    )
    return GroupAction(a.group, product, object_perm, images)
