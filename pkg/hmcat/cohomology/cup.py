"""Cup product on cochains and the identities it should satisfy."""

import itertools
import logging
from typing import Iterator, Sequence

from ..errors import ComplexError
from ..lincat.matrices import Vector, add_scaled, apply
from .cochains import CoboundarySign, CochainComplex

logger = logging.getLogger(__name__)

DEFAULT_CHECK_LIMIT = 400


def cup(cx: CochainComplex, m: int, psi: Vector, n: int, phi: Vector) -> Vector:
    """(ψ⌣φ)(f_{m+n}, ..., f_1) = ψ(f_{m+n}, ..., f_{n+1})∘φ(f_n, ..., f_1).

    ψ has degree m and φ degree n; the result lives in degree m+n.
    """
    if cx.keys is None or cx.category is None:
        raise ComplexError("Cup products need a complex with a cochain basis")
    if m + n > cx.top:
        raise ComplexError(f"Degree {m + n} is beyond the complex (top {cx.top})")
    c = cx.category
    left, right = cx.keys[m], cx.keys[n]
    index = cx.indices[m + n]
    out: Vector = {}
    for i, a in psi.items():
        p, h1 = left[i]
        for j, b in phi.items():
            q, h0 = right[j]
            if c.basis[h1].source != c.basis[h0].target:
                continue
            for h, v in c.compose_basis(h1, h0).items():
                row = index.get((p + q, h))
                if row is None:
                    raise ComplexError("Cup product leaves the chosen cochain basis")
                add_scaled(out, {row: v}, a * b)
    return out


def unit(cx: CochainComplex) -> Vector:
    """Σ_x 1_x in degree 0."""
    if cx.keys is None or cx.category is None:
        raise ComplexError("The unit needs a complex with a cochain basis")
    index = cx.indices[0]
    out: Vector = {}
    for ident in cx.category.identities:
        for h, v in ident.items():
            add_scaled(out, {index[((), h)]: cx.field.one}, v)
    return out


def basis_pairs(dimensions: Sequence[int], top: int, limit: int) -> Iterator[tuple[int, int, int, int]]:
    """Basis pairs (m, i, n, j) with m + n ≤ top, at most ``limit`` of them."""
    pairs = (
        (m, i, n, j)
        for m in range(top + 1)
        for n in range(top + 1 - m)
        for i in range(dimensions[m])
        for j in range(dimensions[n])
    )
    return itertools.islice(pairs, limit)


def leibniz_failures(cx: CochainComplex, limit: int = DEFAULT_CHECK_LIMIT) -> list[str]:
    """Basis pairs on which the Leibniz rule of the complex's sign convention fails.

    STANDARD: d(ψ⌣φ) = dψ⌣φ + (−1)^{|ψ|} ψ⌣dφ
    SHIFTED:  d(ψ⌣φ) = (−1)^{|φ|} dψ⌣φ + ψ⌣dφ
    """
    one = cx.field.one
    out = []
    for m, i, n, j in basis_pairs(cx.dimensions, cx.top - 1, limit):
        psi, phi = {i: one}, {j: one}
        lhs = apply(cx.coboundaries[m + n], cup(cx, m, psi, n, phi))
        dpsi = apply(cx.coboundaries[m], psi)
        dphi = apply(cx.coboundaries[n], phi)
        if cx.sign is CoboundarySign.STANDARD:
            first, second = one, one if m % 2 == 0 else -one
        else:
            first, second = (one if n % 2 == 0 else -one), one
        rhs: Vector = {}
        add_scaled(rhs, cup(cx, m + 1, dpsi, n, phi), first)
        add_scaled(rhs, cup(cx, m, psi, n + 1, dphi), second)
        if lhs != rhs:
            out.append(f"Leibniz rule fails for {cx.label(m, i)} ⌣ {cx.label(n, j)}")
    return out


def associativity_failures(cx: CochainComplex, limit: int = DEFAULT_CHECK_LIMIT) -> list[str]:
    """Basis triples with (χ⌣ψ)⌣φ ≠ χ⌣(ψ⌣φ), degrees summing to at most top."""
    one = cx.field.one
    out = []
    triples = (
        (a, i, b, j, c, k)
        for a in range(cx.top + 1)
        for b in range(cx.top + 1 - a)
        for c in range(cx.top + 1 - a - b)
        for i in range(cx.dimensions[a])
        for j in range(cx.dimensions[b])
        for k in range(cx.dimensions[c])
    )
    for a, i, b, j, c, k in itertools.islice(triples, limit):
        chi, psi, phi = {i: one}, {j: one}, {k: one}
        left = cup(cx, a + b, cup(cx, a, chi, b, psi), c, phi)
        right = cup(cx, a, chi, b + c, cup(cx, b, psi, c, phi))
        if left != right:
            out.append(f"Cup product is not associative on {cx.label(a, i)}, {cx.label(b, j)}, {cx.label(c, k)}")
    return out


def unit_failures(cx: CochainComplex) -> list[str]:
    """Degrees where 1⌣φ = φ = φ⌣1 fails for some basis cochain."""
    one = cx.field.one
    e = unit(cx)
    out = []
    for n in range(cx.top + 1):
        for j in range(cx.dimensions[n]):
            phi = {j: one}
            if cup(cx, 0, e, n, phi) != phi or cup(cx, n, phi, 0, e) != phi:
                out.append(f"Σ 1_x is not a unit for {cx.label(n, j)}")
                break
    return out
