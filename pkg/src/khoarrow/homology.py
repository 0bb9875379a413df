"""Exact integer homology of bigraded complexes via Smith normal form.

The boundary maps preserve the quantum grading, so each homological
degree splits into independent blocks per quantum degree; every block's
homology is read off from the Smith normal forms of the incoming and
outgoing boundary restrictions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .snf import snf_diagonal

__all__ = ["HomologyTable", "NotAComplex", "homology"]


class NotAComplex(ValueError):
    pass


@dataclass(frozen=True)
class HomologyTable:
    """Betti numbers and torsion invariant factors per bidegree (h, q).

    entries maps (h, q) -> (betti, torsion) with torsion a tuple of
    successive invariant factors >= 2.  Bidegrees with trivial homology
    are omitted.
    """

    entries: dict = field(default_factory=dict)

    def betti(self, h: int, q: int) -> int:
        return self.entries.get((h, q), (0, ()))[0]

    def torsion(self, h: int, q: int) -> tuple:
        return self.entries.get((h, q), (0, ()))[1]

    def bidegrees(self):
        return sorted(self.entries)

    def iter_bidegrees(self):
        for (h, q), (betti, _) in sorted(self.entries.items()):
            if betti:
                yield h, q, betti

    def group_rows(self):
        """Sorted (h, q, betti, torsion) rows for display/serialization."""
        return [(h, q, b, t) for (h, q), (b, t) in sorted(self.entries.items())]

    def __eq__(self, other):
        if not isinstance(other, HomologyTable):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(tuple(sorted(
            (hq, b, tuple(t)) for hq, (b, t) in self.entries.items())))


def _blocks_by_q(qs):
    by_q: dict[int, list[int]] = {}
    for idx, q in enumerate(qs):
        by_q.setdefault(q, []).append(idx)
    return by_q


def _rank_and_torsion(M) -> tuple[int, tuple[int, ...]]:
    diag = snf_diagonal(M)
    return len(diag), tuple(d for d in diag if d > 1)


def homology(c) -> HomologyTable:
    """Integer homology of a BigradedComplex, exact over Z."""
    if not c.check_d_squared():
        raise NotAComplex("boundary maps do not square to zero")
    entries: dict = {}
    degrees = sorted(c.groups)
    for h in degrees:
        qs_here = c.groups[h]
        by_q = _blocks_by_q(qs_here)
        d_out = c.boundaries.get(h)
        d_in = c.boundaries.get(h - 1)
        qs_next = c.groups.get(h + 1, [])
        qs_prev = c.groups.get(h - 1, [])
        next_by_q = _blocks_by_q(qs_next)
        prev_by_q = _blocks_by_q(qs_prev)
        for q, cols in by_q.items():
            dim = len(cols)
            rank_out = 0
            if d_out is not None and next_by_q.get(q):
                block = d_out[np.ix_(next_by_q[q], cols)]
                rank_out, _ = _rank_and_torsion(block)
            rank_in = 0
            torsion: tuple[int, ...] = ()
            if d_in is not None and prev_by_q.get(q):
                block = d_in[np.ix_(cols, prev_by_q[q])]
                rank_in, torsion = _rank_and_torsion(block)
            betti = dim - rank_out - rank_in
            if betti < 0:
                raise NotAComplex(
                    f"negative rank at (h={h}, q={q}): not a complex")
            if betti or torsion:
                entries[(h, q)] = (betti, torsion)
    return HomologyTable(entries)
