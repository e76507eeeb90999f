"""Slices, inseparable pairs, descending chains and crossing of cut pairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import PreconditionError
from .graph import CutPair, Graph, as_pair, components, cut_vertices, enumerate_cut_pairs, is_connected


@dataclass(frozen=True)
class Slice:
    """One component of ``g - boundary`` together with its closure."""

    boundary: CutPair
    interior: frozenset
    closure: frozenset

    def sorted_closure(self) -> tuple[int, ...]:
        return tuple(sorted(self.closure))


@dataclass(frozen=True)
class InseparablePair:
    a: int
    b: int


def slices_of_pair(g: Graph, p) -> list[Slice]:
    """Slices cut out by ``p``, ordered by smallest interior vertex.

    The closure of a part adds each member of ``p`` adjacent to that part.
    """
    p = as_pair(p)
    out = []
    for part in components(g, p.members).parts:
        attached = {x for x in p if any(w in part for w in g.neighbors(x))}
        out.append(Slice(p, part, part | attached))
    return out


def slice_contains(s: Slice, v: int) -> bool:
    return v in s.closure


def _require_two_connected(g: Graph, what: str) -> None:
    if g.n < 4:
        raise PreconditionError(f"{what} needs n >= 4, got n = {g.n}", witness=g.n)
    if not is_connected(g):
        raise PreconditionError(f"{what} needs a connected graph")
    cuts = cut_vertices(g)
    if cuts:
        raise PreconditionError(f"{what} needs a 2-connected graph: {cuts[0]} is a cut vertex", witness=cuts[0])


def find_inseparable_pair(g: Graph, cut_pairs: Sequence[CutPair] | None = None) -> InseparablePair | None:
    """Lexicographically least nonadjacent pair that no cut pair separates.

    Adjacent vertices are never separated, so only nonadjacent pairs are
    candidates. ``None`` means every nonadjacent pair is separated by some
    cut pair.
    """
    _require_two_connected(g, "find_inseparable_pair")
    if cut_pairs is None:
        cut_pairs = enumerate_cut_pairs(g)
    # part index of every vertex, per cut pair
    where = []
    for p in cut_pairs:
        lab = {}
        for i, part in enumerate(components(g, p.members).parts):
            for v in part:
                lab[v] = i
        where.append((p, lab))
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b):
                continue
            if not any(a not in p and b not in p and lab[a] != lab[b] for p, lab in where):
                return InseparablePair(a, b)
    return None


def chain_intersection(chain: Sequence[Slice]) -> Slice | None:
    """Intersection of a weakly descending chain of slices.

    Finite chains stabilise, so a nonempty intersection is the closure of the
    last slice; that is asserted rather than assumed.
    """
    if not chain:
        raise PreconditionError("chain must contain at least one slice")
    for i, (big, small) in enumerate(zip(chain, chain[1:])):
        if not small.closure <= big.closure:
            raise PreconditionError(f"not a descending chain at position {i + 1}", witness=i + 1)
    common = frozenset.intersection(*(s.closure for s in chain))
    if not common:
        return None
    last = chain[-1]
    assert common == last.closure, "descending chain did not stabilise at its last element"
    return last


def all_slices(g: Graph, cut_pairs: Sequence[CutPair] | None = None) -> list[Slice]:
    if cut_pairs is None:
        cut_pairs = enumerate_cut_pairs(g)
    return [s for p in cut_pairs for s in slices_of_pair(g, p)]


def minimal_slice_containing(g: Graph, a: int, cut_pairs: Sequence[CutPair] | None = None) -> Slice:
    """An inclusion-minimal slice whose closure holds ``a``.

    Ties go to the smallest closure, then to the lexicographically smallest
    sorted closure. A smallest-cardinality candidate is inclusion-minimal.
    """
    candidates = [s for s in all_slices(g, cut_pairs) if a in s.closure]
    if not candidates:
        raise PreconditionError(f"no slice contains vertex {a} (the graph has no cut pairs)", witness=a)
    return min(candidates, key=lambda s: (len(s.closure), s.sorted_closure()))


def pair_crosses(g: Graph, p, q) -> bool:
    """True iff the members of ``q`` outside ``p`` meet two parts of ``g - p``."""
    p, q = as_pair(p), as_pair(q)
    if p == q:
        raise PreconditionError(f"a pair cannot cross itself: {p}", witness=p)
    rest = [v for v in q if v not in p]
    if len(rest) < 2:
        return False
    cp = components(g, p.members)
    return cp.part_of(rest[0]) != cp.part_of(rest[1])


def family_is_noncrossing(g: Graph, family: Sequence) -> tuple[bool, tuple[CutPair, CutPair] | None]:
    """Check every ordered pair of family members; return the first crossing witness."""
    members = [as_pair(p) for p in family]
    for p in members:
        for q in members:
            if p != q and pair_crosses(g, p, q):
                return False, (p, q)
    return True, None


def greedy_noncrossing(g: Graph, family: Sequence) -> list[CutPair]:
    """Maximal non-crossing subfamily, built greedily in lexicographic order."""
    kept: list[CutPair] = []
    for p in sorted(as_pair(x) for x in family):
        if all(not pair_crosses(g, p, q) and not pair_crosses(g, q, p) for q in kept):
            kept.append(p)
    return kept
