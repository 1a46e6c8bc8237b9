"""Nesting of connected components: trees, face tuples and their codec.

A disconnected embedding adds two pieces of data on top of the component
rotations: a nesting tree (which inner face of which component hosts each
other component; children of the dummy root rho share the outer face) and
a face tuple (each component's outer face under the reference-face
projection).  The tree encodes to a (c-1)-tuple of labels by a Pruefer
variant that deletes the smallest-id leaf component and records the label
of its parent edge.
"""

from __future__ import annotations

from .codecs import nesting_tuple_preprocess
from .embedding import (
    NestingEdge,
    PlanarEmbedding,
    Rotation,
    face_intervals,
    validate,
)
from .errors import EmbeddingMismatch, LabelOutOfRange, MalformedTree
from .graph import Graph


def digamma(emb: PlanarEmbedding) -> tuple[list[NestingEdge], list[int]]:
    """Nesting tree and face tuple of an embedding.

    The embedding object carries both; this accessor re-validates and
    hands them out in canonical form.
    """
    problems = validate(emb)
    if problems:
        raise EmbeddingMismatch("; ".join(problems))
    return list(emb.nesting), list(emb.face_tuple)


def digamma_inverse(
    graph: Graph,
    rot: Rotation,
    nesting: list[NestingEdge],
    face_tuple: list[int],
) -> PlanarEmbedding:
    """Assemble an embedding from component rotations plus nesting data."""
    emb = PlanarEmbedding(graph, rot, nesting, face_tuple)
    problems = validate(emb)
    if problems:
        raise EmbeddingMismatch("; ".join(problems))
    return emb


def nesting_encode(nesting: list[NestingEdge], c: int) -> list[int]:
    """Pruefer-variant code of a nesting tree: c-1 edge labels.

    Repeatedly delete the leaf component with the smallest id and record
    the label of its parent edge; rho (node 0) is never deleted.
    """
    parent: dict[int, tuple[int, int]] = {}
    children: dict[int, set[int]] = {h: set() for h in range(0, c + 1)}
    for p, ch, lb in nesting:
        if ch in parent or not (0 <= p <= c and 1 <= ch <= c):
            raise MalformedTree(f"bad nesting edge ({p},{ch},{lb})")
        parent[ch] = (p, lb)
        children[p].add(ch)
    if set(parent) != set(range(1, c + 1)):
        raise MalformedTree("nesting tree must give every component one parent")

    import heapq

    leaves = [h for h in range(1, c + 1) if not children[h]]
    heapq.heapify(leaves)
    out = []
    for _ in range(c - 1):
        leaf = heapq.heappop(leaves)
        p, lb = parent[leaf]
        out.append(lb)
        children[p].discard(leaf)
        if p != 0 and not children[p]:
            heapq.heappush(leaves, p)
    return out


def nesting_decode(tau: list[int], face_counts: list[int]) -> list[NestingEdge]:
    """Nesting tree from a (c-1)-tuple of labels (inverse of encode).

    The preprocessing tuple tau' maps each label to its parent component;
    then c-1 rounds attach the smallest component of remaining degree one,
    and the survivor hangs under rho with label 0.
    """
    c = len(face_counts)
    if len(tau) != c - 1:
        raise LabelOutOfRange(f"expected {c - 1} labels, got {len(tau)}")
    intervals = face_intervals(face_counts)
    tau_prime, deltas = nesting_tuple_preprocess(tau, intervals)
    edges: list[NestingEdge] = []
    attached: set[int] = set()
    for i in range(c - 1):
        h = min(x for x in range(1, c + 1) if deltas[x] == 1 and x not in attached)
        k = tau_prime[i]
        edges.append((k, h, tau[i]))
        attached.add(h)
        deltas[h] -= 1
        deltas[k] -= 1
    survivor = next(x for x in range(1, c + 1) if x not in attached)
    edges.append((0, survivor, 0))
    return sorted(edges)


class NestingCodec:
    """Rank/unrank of the nesting segment <a_1..a_{c-1}, b_1..b_c>.

    The a values are tree labels (each bounded by sum(F_i - 1) + 1), the
    b values the face tuple entries (bounded by F_i).
    """

    def __init__(self, face_counts: list[int]) -> None:
        self.face_counts = list(face_counts)
        self.c = len(face_counts)
        self.label_bound = sum(f - 1 for f in face_counts) + 1

    @property
    def bounds(self) -> list[int]:
        return [self.label_bound] * (self.c - 1) + list(self.face_counts)

    def forward(self, nesting: list[NestingEdge], face_tuple: list[int]
                ) -> tuple[list[int], list[int]]:
        a = nesting_encode(nesting, self.c)
        return a, list(face_tuple)

    def inverse(self, a: list[int], b: list[int]
                ) -> tuple[list[NestingEdge], list[int]]:
        for o, f in zip(b, self.face_counts):
            if not 0 <= o < f:
                raise LabelOutOfRange(f"face tuple entry {o} outside 0..{f - 1}")
        return nesting_decode(a, self.face_counts), list(b)
