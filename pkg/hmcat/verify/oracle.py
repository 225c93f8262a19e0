"""Brute-force Hochschild (co)homology of an algebra from its multiplication table.

Independent of the category machinery: the complexes are the classical
ones, A^{⊗(n+1)} with the Hochschild boundary and Hom(A^{⊗n}, A) with the
Hochschild coboundary, assembled over plain index tuples. Used as a
cross-check for the category-level pipelines.
"""

import logging
from itertools import product
from typing import Mapping

from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

Table = Mapping[tuple[int, int], Mapping[int, object]]


class Oracle:
    """Hochschild complexes of a d-dimensional algebra over GF(p) or QQ.

    ``table[(i, j)]`` holds e_i·e_j as ``{k: coefficient}``; coefficients
    are ints or anything the domain converts.
    """

    def __init__(self, characteristic: int, dimension: int, table: Table, limit: int = 4096):
        self.domain = QQ if characteristic == 0 else GF(characteristic, symmetric=False)
        self.d = dimension
        self.limit = limit
        one = self.domain.one
        self.table = {
            key: {k: self.domain.convert(v) * one for k, v in value.items() if v}
            for key, value in table.items()
        }

    @classmethod
    def of(cls, algebra, limit: int = 4096) -> "Oracle":
        """Read the table off anything with ``field``, ``labels`` and ``table``."""
        return cls(algebra.field.characteristic, len(algebra.labels), algebra.table, limit)

    def _mul(self, i: int, j: int) -> Mapping[int, object]:
        return self.table.get((i, j), {})

    def _tuples(self, n: int) -> dict[tuple[int, ...], int]:
        return {t: k for k, t in enumerate(product(range(self.d), repeat=n))}

    def _rank(self, dod: dict[int, dict[int, object]], shape: tuple[int, int]) -> int:
        if not shape[0] or not shape[1]:
            return 0
        return DomainMatrix(dod, shape, self.domain).rank()

    def _fits(self, n: int) -> bool:
        return self.d ** (n + 2) <= self.limit

    # Homology

    def boundary_rank(self, n: int) -> int:
        """rank of b_n: A^{⊗(n+1)} → A^{⊗n}."""
        if n == 0:
            return 0
        rows = self._tuples(n)
        one = self.domain.one
        dod: dict[int, dict[int, object]] = {}

        def put(r: int, c: int, v) -> None:
            row = dod.setdefault(r, {})
            total = row.get(c, self.domain.zero) + v
            if total:
                row[c] = total
            else:
                row.pop(c, None)

        for c, t in enumerate(product(range(self.d), repeat=n + 1)):
            for k in range(n):
                sign = one if k % 2 == 0 else -one
                for m, v in self._mul(t[k], t[k + 1]).items():
                    put(rows[t[:k] + (m,) + t[k + 2 :]], c, sign * v)
            sign = one if n % 2 == 0 else -one
            for m, v in self._mul(t[n], t[0]).items():
                put(rows[(m,) + t[1:n]], c, sign * v)
        return self._rank({r: row for r, row in dod.items() if row}, (len(rows), self.d ** (n + 1)))

    def homology(self, max_degree: int) -> tuple[int, ...]:
        """dim HH_n for n ≤ max_degree, stopping early once spaces exceed ``limit``."""
        ranks = []
        for n in range(max_degree + 2):
            if n > 1 and not self._fits(n - 1):
                break
            ranks.append(self.boundary_rank(n))
        out = tuple(self.d ** (n + 1) - ranks[n] - ranks[n + 1] for n in range(len(ranks) - 1))
        logger.debug(f"oracle homology: {out}")
        return out

    # Cohomology

    def coboundary_rank(self, n: int) -> int:
        """rank of δ_n: Hom(A^{⊗n}, A) → Hom(A^{⊗(n+1)}, A)."""
        d = self.d
        one = self.domain.one
        cols = {(p, o): k for k, (p, o) in enumerate((p, o) for p in product(range(d), repeat=n) for o in range(d))}
        dod: dict[int, dict[int, object]] = {}
        row_index = 0
        last = one if (n + 1) % 2 == 0 else -one
        for q in product(range(d), repeat=n + 1):
            # values of δφ at q for every basis cochain φ, keyed by output basis vector
            values: dict[int, dict[int, object]] = {}

            def put(out: int, c: int, v) -> None:
                row = values.setdefault(out, {})
                total = row.get(c, self.domain.zero) + v
                if total:
                    row[c] = total
                else:
                    row.pop(c, None)

            for o in range(d):
                for out, v in self._mul(q[0], o).items():
                    put(out, cols[(q[1:], o)], v)
            for k in range(n):
                sign = -one if k % 2 == 0 else one
                for m, c in self._mul(q[k], q[k + 1]).items():
                    p = q[:k] + (m,) + q[k + 2 :]
                    for o in range(d):
                        put(o, cols[(p, o)], sign * c)
            for o in range(d):
                for out, v in self._mul(o, q[n]).items():
                    put(out, cols[(q[:n], o)], last * v)
            for out in range(d):
                row = values.get(out)
                if row:
                    dod[row_index + out] = row
            row_index += d
        return self._rank(dod, (row_index, len(cols)))

    def cohomology(self, max_degree: int) -> tuple[int, ...]:
        """dim HH^n for n ≤ max_degree, stopping early once spaces exceed ``limit``."""
        ranks = []
        for n in range(max_degree + 1):
            if not self._fits(n):
                break
            ranks.append(self.coboundary_rank(n))
        out = tuple(self.d ** (n + 1) - ranks[n] - (ranks[n - 1] if n else 0) for n in range(len(ranks)))
        logger.debug(f"oracle cohomology: {out}")
        return out


def skew_group_table(
    dimension: int,
    table: Table,
    group_table: list[list[int]],
    images: list[list[Mapping[int, object]]],
) -> tuple[int, dict[tuple[int, int], dict[int, object]]]:
    """Multiplication table of Λ[G] on λ_i ⊗ s at index i·|G| + s.

    (λ_i ⊗ s)(λ_j ⊗ t) = λ_i·(s·λ_j) ⊗ st, with ``images[s][j]`` = s·λ_j.
    """
    g = len(group_table)
    out: dict[tuple[int, int], dict[int, object]] = {}
    for i, s, j, t in product(range(dimension), range(g), range(dimension), range(g)):
        st = group_table[s][t]
        entry: dict[int, object] = {}
        for k, u in images[s][j].items():
            for m, v in table.get((i, k), {}).items():
                key = m * g + st
                entry[key] = entry.get(key, 0) + u * v
        entry = {k: v for k, v in entry.items() if v}
        if entry:
            out[(i * g + s, j * g + t)] = entry
    return dimension * g, out
