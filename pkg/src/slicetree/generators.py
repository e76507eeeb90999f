"""Graph families used as inputs and as the curated test corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphInputError
from .graph import Graph, cut_vertices, is_connected

RANDOM_RETRIES = 1000


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def prism(n: int) -> Graph:
    """C_n x K_2: outer cycle 0..n-1, inner cycle n..2n-1, spokes i -- n+i."""
    if n < 3:
        raise GraphInputError(f"prism needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


class _Builder:
    def __init__(self, hubs):
        self.labels = list(hubs)
        self.edges = []
        self._mid = 0

    def path(self, u: int, v: int, length: int) -> None:
        prev = u
        for _ in range(length - 1):
            self._mid += 1
            self.labels.append(f"m{self._mid}")
            cur = len(self.labels) - 1
            self.edges.append((prev, cur))
            prev = cur
        self.edges.append((prev, v))

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.labels), self.edges, self.labels)


def theta(l1: int, l2: int, l3: int) -> Graph:
    """Two hubs u=0, v=1 joined by three internally disjoint paths of the given lengths."""
    lengths = (l1, l2, l3)
    if min(lengths) < 1 or sum(1 for x in lengths if x == 1) > 1:
        raise GraphInputError(f"theta needs lengths >= 1 with at most one equal to 1, got {lengths}")
    b = _Builder(["u", "v"])
    for length in lengths:
        b.path(0, 1, length)
    return b.graph()


def theta_chain(k: int, l: int) -> Graph:
    """``k`` thetas in series on hubs u0..uk, each hub pair joined by three paths of length ``l``.

    Skip edges u_i -- u_{i+2} keep the chain 2-connected (without them every
    inner hub is a cut vertex); the 2-vertex cuts are then exactly the
    consecutive hub pairs.
    """
    if k < 1 or l < 2:
        raise GraphInputError(f"theta-chain needs k >= 1 and l >= 2, got k={k}, l={l}")
    b = _Builder([f"u{i}" for i in range(k + 1)])
    for i in range(k):
        for _ in range(3):
            b.path(i, i + 1, l)
    b.edges += [(i, i + 2) for i in range(k - 1)]
    return b.graph()


def theta_ring(k: int, l: int) -> Graph:
    """Hubs u0..u(k-1) on a ring, consecutive hubs joined by three paths of length ``l``.

    For k = 3 the three hub pairs are mutually adjacent: the tripod.
    """
    if k < 3 or l < 2:
        raise GraphInputError(f"theta-ring needs k >= 3 and l >= 2, got k={k}, l={l}")
    b = _Builder([f"u{i}" for i in range(k)])
    for i in range(k):
        for _ in range(3):
            b.path(i, (i + 1) % k, l)
    return b.graph()


def chorded_cycle(n: int, chords) -> Graph:
    g = cycle(n)
    return Graph.from_edges(n, list(g.edges) + [tuple(c) for c in chords])


def random_two_connected(n: int, m: int, seed: int) -> Graph:
    """Uniform G(n, m), redrawn until 2-connected (bounded retries)."""
    if n < 3 or not n <= m <= n * (n - 1) // 2:
        raise GraphInputError(f"random needs n >= 3 and n <= m <= n(n-1)/2, got n={n}, m={m}")
    rng = random.Random(seed)
    pool = list(combinations(range(n), 2))
    for _ in range(RANDOM_RETRIES):
        g = Graph.from_edges(n, rng.sample(pool, m))
        if is_connected(g) and not cut_vertices(g):
            return g
    raise GraphInputError(f"no 2-connected G({n}, {m}) found in {RANDOM_RETRIES} draws (seed {seed})")


DIFFERENTIAL_SEED = 0xB0D1


def differential_suite(count: int = 500, seed: int = DIFFERENTIAL_SEED, max_n: int = 10) -> list[Graph]:
    """Seeded random graphs for oracle comparisons.

    Even draws are G(n, p) with p itself random, so disconnected graphs and
    cut vertices show up; odd draws are a shuffled Hamiltonian cycle plus
    random chords, hence 2-connected, so cut-pair code gets exercised too.
    """
    rng = random.Random(seed)
    out = []
    for i in range(count):
        if i % 2 == 0:
            n = rng.randint(1, max_n)
            p = rng.random()
            out.append(Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p]))
        else:
            n = rng.randint(4, max_n)
            order = list(range(n))
            rng.shuffle(order)
            ring = {tuple(sorted((order[j], order[(j + 1) % n]))) for j in range(n)}
            chords = [e for e in combinations(range(n), 2) if e not in ring]
            extra = rng.sample(chords, rng.randint(0, min(len(chords), n)))
            out.append(Graph.from_edges(n, sorted(ring) + extra))
    return out


KINDS = {
    "cycle": (cycle, 1),
    "theta": (theta, 3),
    "theta-chain": (theta_chain, 2),
    "theta-ring": (theta_ring, 2),
    "complete": (complete, 1),
    "prism": (prism, 1),
    "random": (random_two_connected, 3),
}


def generate(kind: str, *params: int, seed: int | None = None) -> Graph:
    """Dispatch on ``kind``; ``random`` takes ``n m seed`` or ``n m`` plus ``seed=``."""
    if kind not in KINDS:
        raise GraphInputError(f"unknown graph kind {kind!r}; choose from {', '.join(KINDS)}")
    fn, arity = KINDS[kind]
    params = tuple(int(p) for p in params)
    if kind == "random" and len(params) == 2:
        params += (0 if seed is None else seed,)
    if len(params) != arity:
        raise GraphInputError(f"{kind} takes {arity} integer parameters, got {len(params)}")
    return fn(*params)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    family: str
    graph: Graph


# cycles with two crossing chords; a single chord never leaves an inseparable pair
CROSSING_CHORDS = {
    6: [(0, 3), (1, 4)],
    7: [(0, 3), (1, 5)],
    8: [(0, 4), (2, 6)],
    9: [(0, 4), (2, 6)],
    10: [(0, 5), (2, 7)],
}

RANDOM_SPECS = [(6, 9, 1), (7, 10, 2), (8, 11, 3), (8, 13, 4), (9, 13, 5), (10, 15, 6), (10, 14, 7)]


def curated_corpus() -> list[CorpusEntry]:
    out = []
    for n in range(4, 17):
        out.append(CorpusEntry(f"cycle-{n}", "cycle", cycle(n)))
    for ls in [(2, 2, 2), (2, 2, 3), (2, 3, 3), (2, 3, 4), (3, 3, 3)]:
        out.append(CorpusEntry("theta-" + "-".join(map(str, ls)), "theta", theta(*ls)))
    for k, l in [(2, 2), (3, 2), (2, 3)]:
        out.append(CorpusEntry(f"theta-chain-{k}-{l}", "theta-chain", theta_chain(k, l)))
    out.append(CorpusEntry("theta-ring-3-2", "theta-ring", theta_ring(3, 2)))
    for n, chords in CROSSING_CHORDS.items():
        out.append(CorpusEntry(f"chorded-{n}", "chorded", chorded_cycle(n, chords)))
    for n in range(4, 9):
        out.append(CorpusEntry(f"complete-{n}", "complete", complete(n)))
    for n in range(3, 7):
        out.append(CorpusEntry(f"prism-{n}", "prism", prism(n)))
    for n, m, seed in RANDOM_SPECS:
        out.append(CorpusEntry(f"random-{n}-{m}-{seed}", "random", random_two_connected(n, m, seed)))
    return out
