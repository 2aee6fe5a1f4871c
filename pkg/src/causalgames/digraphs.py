"""Simple directed graphs on [n], game-family constructors, and enumeration.

Arc coordinates are indexed lexicographically over ordered pairs (i, j) with
i != j, so vectors over arcs have dimension d = n(n-1).  Internally whole
digraphs are often carried as d-bit integer masks, which keeps desk-scale
enumeration (millions of digraphs) affordable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

Arc = Tuple[int, int]

MAX_FILTER_N = 5       # all-digraph filtering scans 2^(n(n-1)) masks
MAX_DAG_N = 6          # recursive DAG enumeration
MAX_ISO_N = 8          # brute-force isomorphism over n! relabelings


class PolytopeClass(Enum):
    DAG = "dag"
    SOURCE = "source"
    NOT_STRONG = "notstrong"


def arc_pairs(n: int) -> List[Arc]:
    """All ordered pairs (i, j), i != j, in lexicographic order."""
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def arc_index(n: int, i: int, j: int) -> int:
    """Lexicographic coordinate of the arc (i, j)."""
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"not an arc of [{n}]: ({i}, {j})")
    return i * (n - 1) + (j if j < i else j - 1)


@dataclass(frozen=True)
class Digraph:
    """Simple digraph over vertex set [n]."""

    n: int
    arcs: FrozenSet[Arc]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need at least two vertices")
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for i, j in self.arcs:
            if i == j:
                raise ValueError(f"self-loop at {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"arc ({i}, {j}) out of range for n={self.n}")

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def mask(self) -> int:
        """The digraph as a d-bit integer, bit k = arc at lex index k."""
        m = 0
        for i, j in self.arcs:
            m |= 1 << arc_index(self.n, i, j)
        return m

    def out_neighbors(self, i: int) -> List[int]:
        return sorted(j for a, j in self.arcs if a == i)

    def remove_arc(self, arc: Arc) -> "Digraph":
        return Digraph(self.n, self.arcs - {arc})


def from_mask(n: int, mask: int) -> Digraph:
    pairs = arc_pairs(n)
    return Digraph(n, frozenset(pairs[k] for k in range(len(pairs)) if mask >> k & 1))


def adjacency_vector(d: Digraph) -> Tuple[Fraction, ...]:
    """0/1 adjacency vector of length n(n-1) in lex arc order."""
    v = [Fraction(0)] * (d.n * (d.n - 1))
    for i, j in d.arcs:
        v[arc_index(d.n, i, j)] = Fraction(1)
    return tuple(v)


# ---------------------------------------------------------------------------
# Game families

def make_cycle(n: int, k: int) -> Digraph:
    """k-cycle on vertices 0..k-1, vertices k..n-1 isolated."""
    if not n >= k >= 2:
        raise ValueError(f"need n >= k >= 2, got n={n}, k={k}")
    return Digraph(n, frozenset((i, (i + 1) % k) for i in range(k)))


def make_fence(n: int, k: int) -> Digraph:
    """k-fence: downward posts 2i->2i+1 and upward rails (2i+1)->2j, i != j.

    Rails range over distinct pairs from [k]; the digraph has k^2 arcs.
    """
    if not n >= 2 * k >= 4:
        raise ValueError(f"need n >= 2k >= 4, got n={n}, k={k}")
    posts = {(2 * i, 2 * i + 1) for i in range(k)}
    rails = {(2 * i + 1, 2 * j) for i in range(k) for j in range(k) if i != j}
    return Digraph(n, frozenset(posts | rails))


def make_mobius(n: int, k: int) -> Digraph:
    """k-Moebius (k odd): the 2k-cycle plus chords (2i+3 mod 2k) -> 2i."""
    if not n >= 2 * k >= 6 or k % 2 == 0:
        raise ValueError(f"need n >= 2k >= 6 and k odd, got n={n}, k={k}")
    cycle = {(i, (i + 1) % (2 * k)) for i in range(2 * k)}
    chords = {((2 * i + 3) % (2 * k), 2 * i) for i in range(k)}
    return Digraph(n, frozenset(cycle | chords))


def make_kefalopoda(n: int, f: Sequence[int]) -> Digraph:
    """Digraph with arcs f(i)->i for a fixed-point-free predecessor map f."""
    if len(f) != n:
        raise ValueError(f"predecessor map must have length {n}")
    for i, fi in enumerate(f):
        if fi == i:
            raise ValueError(f"fixed point at {i}")
        if not 0 <= fi < n:
            raise ValueError(f"f({i}) = {fi} out of range")
    return Digraph(n, frozenset((f[i], i) for i in range(n)))


def make_twisted_cylinder() -> Digraph:
    """The 4-party twisted cylinder: two 2-cycles joined by crossing arcs.

    Labels: 0 top-left, 1 bottom-left, 2 top-right, 3 bottom-right.
    """
    arcs = {(0, 1), (1, 0), (2, 3), (3, 2), (0, 2), (1, 3), (3, 0), (2, 1)}
    return Digraph(4, frozenset(arcs))


# ---------------------------------------------------------------------------
# Connectivity and structure predicates

def is_acyclic(d: Digraph) -> bool:
    """True iff the digraph has no directed cycle (Kahn peeling)."""
    indeg = {v: 0 for v in range(d.n)}
    out: Dict[int, List[int]] = {v: [] for v in range(d.n)}
    for i, j in d.arcs:
        indeg[j] += 1
        out[i].append(j)
    queue = [v for v in range(d.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == d.n


def sources(d: Digraph) -> FrozenSet[int]:
    """Vertices with in-degree zero."""
    has_in = {j for _, j in d.arcs}
    return frozenset(v for v in range(d.n) if v not in has_in)


def strongly_connected_components(d: Digraph) -> List[FrozenSet[int]]:
    """SCCs in reverse topological order of the condensation (Tarjan)."""
    out: Dict[int, List[int]] = {v: [] for v in range(d.n)}
    for i, j in d.arcs:
        out[i].append(j)
    index: Dict[int, int] = {}
    low: Dict[int, int] = {}
    on_stack: Dict[int, bool] = {}
    stack: List[int] = []
    comps: List[FrozenSet[int]] = []
    counter = [0]

    def strongconnect(root: int) -> None:
        work = [(root, iter(out[root]))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(out[w])))
                    advanced = True
                    break
                if on_stack.get(w):
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.add(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))

    for v in range(d.n):
        if v not in index:
            strongconnect(v)
    return comps


def condensation(d: Digraph) -> Digraph:
    """Digraph over SCC indices; acyclic by construction.

    A single-component condensation has no arcs, which requires at least
    two vertices in Digraph; that degenerate case is returned as a 2-vertex
    arcless digraph only when n would be 1.
    """
    comps = strongly_connected_components(d)
    comp_of = {v: k for k, comp in enumerate(comps) for v in comp}
    arcs = set()
    for i, j in d.arcs:
        if comp_of[i] != comp_of[j]:
            arcs.add((comp_of[i], comp_of[j]))
    m = max(len(comps), 2)
    return Digraph(m, frozenset(arcs))


def is_strong(d: Digraph) -> bool:
    return len(strongly_connected_components(d)) == 1


def is_minimally_strong(d: Digraph) -> bool:
    """Strong, and the removal of any single arc breaks strong connectivity."""
    if not is_strong(d):
        return False
    return all(not is_strong(d.remove_arc(a)) for a in d.arcs)


def is_kefalopoda(d: Digraph) -> Optional[List[int]]:
    """The predecessor map f if every vertex has in-degree one, else None."""
    pred: Dict[int, List[int]] = {v: [] for v in range(d.n)}
    for i, j in d.arcs:
        pred[j].append(i)
    if any(len(pred[v]) != 1 for v in range(d.n)):
        return None
    return [pred[v][0] for v in range(d.n)]


# ---------------------------------------------------------------------------
# Class membership and enumeration

def in_class(d: Digraph, cls: PolytopeClass) -> bool:
    if cls is PolytopeClass.DAG:
        return is_acyclic(d)
    if cls is PolytopeClass.SOURCE:
        return bool(sources(d))
    return not is_strong(d)


def _ordered_partitions(vertices: Tuple[int, ...]) -> Iterator[List[Tuple[int, ...]]]:
    """Ordered set partitions of a vertex tuple into nonempty blocks."""
    if not vertices:
        yield []
        return
    m = len(vertices)
    for bits in range(1, 1 << m):
        first = tuple(vertices[i] for i in range(m) if bits >> i & 1)
        remaining = tuple(vertices[i] for i in range(m) if not bits >> i & 1)
        for tail in _ordered_partitions(remaining):
            yield [first] + tail


def dag_masks(n: int) -> Iterator[int]:
    """Every labeled DAG on [n] exactly once, as an arc bitmask.

    Generates by longest-path layering: vertices are partitioned into
    ordered layers, each non-first-layer vertex picks a nonempty in-arc
    set from the previous layer plus any arcs from earlier layers.
    """
    if n > MAX_DAG_N:
        raise ValueError(f"recursive DAG enumeration capped at n={MAX_DAG_N}")
    all_vertices = tuple(range(n))
    for layers in _ordered_partitions(all_vertices):
        choice_lists: List[List[int]] = []
        earlier: List[int] = []
        prev: List[int] = []
        for li, layer in enumerate(layers):
            if li > 0:
                for v in layer:
                    prev_arcs = [arc_index(n, u, v) for u in prev]
                    earlier_arcs = [arc_index(n, u, v) for u in earlier]
                    choices = []
                    for pbits in range(1, 1 << len(prev_arcs)):
                        pm = 0
                        for t, a in enumerate(prev_arcs):
                            if pbits >> t & 1:
                                pm |= 1 << a
                        choices.append(pm)
                    if earlier_arcs:
                        full = []
                        for ebits in range(1 << len(earlier_arcs)):
                            em = 0
                            for t, a in enumerate(earlier_arcs):
                                if ebits >> t & 1:
                                    em |= 1 << a
                            full.extend(pm | em for pm in choices)
                        choices = full
                    choice_lists.append(choices)
            earlier = earlier + prev
            prev = list(layer)
        if not choice_lists:
            yield 0
            continue
        for combo in product(*choice_lists):
            m = 0
            for c in combo:
                m |= c
            yield m


def enumerate_class_masks(n: int, cls: PolytopeClass) -> Iterator[int]:
    """Arc bitmasks of every digraph on [n] in the class, each once."""
    if cls is PolytopeClass.DAG:
        yield from dag_masks(n)
        return
    if n > MAX_FILTER_N:
        raise ValueError(f"all-digraph filtering capped at n={MAX_FILTER_N}")
    d = n * (n - 1)
    pairs = arc_pairs(n)
    if cls is PolytopeClass.SOURCE:
        in_masks = []
        for v in range(n):
            m = 0
            for k, (_, j) in enumerate(pairs):
                if j == v:
                    m |= 1 << k
            in_masks.append(m)
        for mask in range(1 << d):
            if any(mask & im == 0 for im in in_masks):
                yield mask
        return
    # NOT_STRONG: reachability closure on vertex bitsets.
    out_template = [[k for k, (i, _) in enumerate(pairs) if i == v] for v in range(n)]
    succ_target = (1 << n) - 1
    for mask in range(1 << d):
        out = []
        for v in range(n):
            m = 1 << v
            for k in out_template[v]:
                if mask >> k & 1:
                    m |= 1 << pairs[k][1]
            out.append(m)
        changed = True
        while changed:
            changed = False
            for v in range(n):
                m = out[v]
                acc = m
                w = m
                while w:
                    b = w & -w
                    acc |= out[b.bit_length() - 1]
                    w ^= b
                if acc != m:
                    out[v] = acc
                    changed = True
        if any(out[v] != succ_target for v in range(n)):
            yield mask


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every simple digraph on [n]; capped with the filtering enumerations."""
    if n > MAX_FILTER_N:
        raise ValueError(f"all-digraph enumeration capped at n={MAX_FILTER_N}")
    for mask in range(1 << (n * (n - 1))):
        yield from_mask(n, mask)


def fixed_point_free_maps(n: int) -> Iterator[Tuple[int, ...]]:
    """All (n-1)^n predecessor maps f with f(i) != i."""
    yield from product(*[[s for s in range(n) if s != i] for i in range(n)])


def enumerate_class(n: int, cls: PolytopeClass) -> Iterator[Digraph]:
    """Every digraph on [n] in the class, each exactly once."""
    for mask in enumerate_class_masks(n, cls):
        yield from_mask(n, mask)


def relabel(d: Digraph, perm: Sequence[int]) -> Digraph:
    """Apply a vertex permutation: vertex v becomes perm[v]."""
    if sorted(perm) != list(range(d.n)):
        raise ValueError("not a permutation of [n]")
    return Digraph(d.n, frozenset((perm[i], perm[j]) for i, j in d.arcs))


def are_isomorphic(d: Digraph, e: Digraph) -> Optional[Tuple[int, ...]]:
    """A relabeling permutation taking d to e, or None.

    Brute force over all n! permutations; capped at n <= 8.
    """
    if d.n != e.n:
        raise ValueError("digraphs of different order")
    if d.n > MAX_ISO_N:
        raise ValueError(f"isomorphism search capped at n={MAX_ISO_N}")
    if d.arc_count != e.arc_count:
        return None
    target = e.arcs
    for perm in permutations(range(d.n)):
        if all((perm[i], perm[j]) in target for i, j in d.arcs):
            return perm
    return None


# ---------------------------------------------------------------------------
# Serialization

def digraph_to_json(d: Digraph) -> dict:
    return {"n": d.n, "arcs": [list(a) for a in sorted(d.arcs)]}


def digraph_from_json(obj: dict) -> Digraph:
    return Digraph(int(obj["n"]), frozenset((int(i), int(j)) for i, j in obj["arcs"]))


def save_digraph(d: Digraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(digraph_to_json(d), fh)
        fh.write("\n")


def load_digraph(path: str) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return digraph_from_json(json.load(fh))
