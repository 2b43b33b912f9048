"""Sparse exact linear algebra over the rationals.

An incremental Gauss-Jordan eliminator for systems whose columns are indexed
by arbitrary sortable keys (words, word pairs).  Rows arrive one at a time;
pivot rows are kept mutually reduced, so reading off a solution is a lookup.
Several right-hand sides share one elimination pass.

Everything is exact `Fraction` arithmetic and fully deterministic: pivot
columns are chosen by the smallest sort key present in a reduced row.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Sequence


class LinearSystem:
    """Equations sum_c row[c]*x_c = b, solved over the rationals.

    `n_rhs` right-hand sides are carried through a single elimination.
    `key` maps a column label to its sort key (default: the label itself).
    """

    def __init__(self, n_rhs: int, key: Callable[[Hashable], object] | None = None):
        self.n_rhs = n_rhs
        self.key = key or (lambda c: c)
        # pivot column -> (row dict with that column scaled to 1, aug list)
        self.pivots: dict[Hashable, tuple[dict, list[Fraction]]] = {}
        # column -> set of pivot columns whose stored row touches it
        self.where: dict[Hashable, set] = {}
        self.inconsistent = [False] * n_rhs

    def add_equation(self, coeffs: dict, rhs: Sequence[Fraction]):
        row = {c: Fraction(v) for c, v in coeffs.items() if v}
        aug = [Fraction(v) for v in rhs]
        if len(aug) != self.n_rhs:
            raise ValueError("wrong number of right-hand-side entries")

        # Reduce against existing pivots.  Pivot rows contain no pivot column
        # other than their own, so one pass over the incoming columns suffices.
        for col in sorted(row, key=self.key):
            if col not in self.pivots or col not in row:
                continue
            factor = row.pop(col)
            prow, paug = self.pivots[col]
            for c, v in prow.items():
                if c == col:
                    continue
                acc = row.get(c, Fraction(0)) - factor * v
                if acc:
                    row[c] = acc
                else:
                    row.pop(c, None)
            for j in range(self.n_rhs):
                aug[j] -= factor * paug[j]

        if not row:
            for j in range(self.n_rhs):
                if aug[j]:
                    self.inconsistent[j] = True
            return

        pivot = min(row, key=self.key)
        scale = 1 / row[pivot]
        row = {c: v * scale for c, v in row.items()}
        aug = [v * scale for v in aug]

        # Restore full reduction: clear the new pivot column from stored rows.
        touched = self.where.get(pivot)
        if touched:
            for other in sorted(touched, key=self.key):
                orow, oaug = self.pivots[other]
                factor = orow.pop(pivot)
                for c, v in row.items():
                    if c == pivot:
                        continue
                    acc = orow.get(c, Fraction(0)) - factor * v
                    if acc:
                        if c not in orow:
                            self.where.setdefault(c, set()).add(other)
                        orow[c] = acc
                    elif c in orow:
                        del orow[c]
                        self.where[c].discard(other)
                for j in range(self.n_rhs):
                    oaug[j] -= factor * aug[j]
            del self.where[pivot]

        self.pivots[pivot] = (row, aug)
        for c in row:
            if c != pivot:
                self.where.setdefault(c, set()).add(pivot)

    def solutions(self) -> list[dict | None]:
        """One solution per right-hand side (free variables set to 0).

        Returns None for inconsistent systems.  Valid once all equations of
        the system have been added; adding more equations can only turn a
        solution into None, never change a consistent value on pivots.
        """
        out: list[dict | None] = []
        for j in range(self.n_rhs):
            if self.inconsistent[j]:
                out.append(None)
                continue
            sol = {}
            for col, (_, aug) in self.pivots.items():
                if aug[j]:
                    sol[col] = aug[j]
            out.append(sol)
        return out
