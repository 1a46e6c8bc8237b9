"""Brute-force ground truth for the ranking bijections.

Everything here enumerates exhaustively and filters with Euler's formula;
nothing imports the production rank/unrank paths.  Used by tests and the
`verify` command only.  Guards raise TooLarge instead of truncating, so a
test can never silently pass on a partial enumeration.
"""

from __future__ import annotations

import itertools

from .embedding import PlanarEmbedding, Rotation, canonical_cycle, face_count, face_intervals
from .errors import TooLarge
from .graph import Graph, connected_components

_ROTATION_GUARD = 2_000_000


def all_rotation_systems(g: Graph):
    """Every rotation system of g, each in canonical form.

    Per vertex the first neighbor is pinned, which picks exactly one
    representative per cyclic order.
    """
    total = 1
    for v in g.vertices:
        k = g.degree(v)
        for i in range(2, k):
            total *= i
        if total > _ROTATION_GUARD:
            raise TooLarge("too many rotation systems to enumerate")
    per_vertex = []
    for v in g.vertices:
        nbrs = g.adj[v]
        per_vertex.append([[nbrs[0], *rest] for rest in itertools.permutations(nbrs[1:])])
    for combo in itertools.product(*per_vertex):
        yield {v: list(combo[i]) for i, v in enumerate(g.vertices)}


def _euler_ok(comp: frozenset[int], rot: Rotation) -> bool:
    sub = {v: rot[v] for v in comp}
    m_c = sum(len(sub[v]) for v in comp) // 2
    return len(comp) - m_c + face_count(sub) == 2


def enumerate_connected(g: Graph) -> list[Rotation]:
    """All sphere embeddings (planar rotation systems) of a connected graph."""
    if g.n > 8:
        raise TooLarge(f"n={g.n} exceeds the n<=8 oracle guard")
    comps = connected_components(g)
    if len(comps) != 1:
        raise ValueError("enumerate_connected needs a connected graph")
    comp = comps[0][1]
    return [rot for rot in all_rotation_systems(g) if _euler_ok(comp, rot)]


def all_nesting_trees(c: int, face_counts: list[int]):
    """Every labelled nesting tree on components 1..c under root rho (0).

    A tree is a parent map; edges to rho carry label 0, an edge below
    component h carries any label in the interval I_h.
    """
    intervals = face_intervals(face_counts)
    for parents in itertools.product(range(0, c + 1), repeat=c):
        # parents[i] is the parent of component i+1; self-parents are junk.
        ok = True
        for ch in range(1, c + 1):
            seen = set()
            cur = ch
            while cur != 0:
                if cur in seen or parents[cur - 1] == cur:
                    ok = False
                    break
                seen.add(cur)
                cur = parents[cur - 1]
            if not ok:
                break
        if not ok:
            continue
        label_choices = []
        for ch in range(1, c + 1):
            p = parents[ch - 1]
            if p == 0:
                label_choices.append([0])
            else:
                lo, hi = intervals[p - 1]
                label_choices.append(list(range(lo, hi + 1)))
        for labels in itertools.product(*label_choices):
            yield sorted((parents[ch - 1], ch, labels[ch - 1]) for ch in range(1, c + 1))


def enumerate_disconnected(g: Graph, guard: int = 200_000) -> set[str]:
    """All embeddings of g as canonical JSON strings.

    Cross product of per-component sphere embeddings, nesting trees and
    face tuples.
    """
    comps = connected_components(g)
    rot_sets = []
    face_counts = []
    for _, comp in comps:
        order = sorted(comp)
        remap = {v: i + 1 for i, v in enumerate(order)}
        back = {i + 1: v for i, v in enumerate(order)}
        edges = [(remap[u], remap[v]) for u, v in g.edges if u in comp]
        sub = Graph(len(order), edges)
        rots = enumerate_connected(sub)
        rot_sets.append(
            [{back[v]: [back[w] for w in rot[v]] for v in rot} for rot in rots]
        )
        face_counts.append(sub.m - sub.n + 2)

    c = len(comps)
    total_faces = 1
    for f in face_counts:
        total_faces *= f
    sigma = sum(f - 1 for f in face_counts)
    est = total_faces * (sigma + 1) ** max(c - 1, 0)
    for rs in rot_sets:
        est *= len(rs)
    if est > guard:
        raise TooLarge(f"{est} embeddings exceed the oracle guard")

    trees = list(all_nesting_trees(c, face_counts))
    out: set[str] = set()
    for rot_combo in itertools.product(*rot_sets):
        rot: Rotation = {}
        for r in rot_combo:
            rot.update(r)
        for tree in trees:
            for ft in itertools.product(*[range(f) for f in face_counts]):
                emb = PlanarEmbedding(g, rot, tree, list(ft))
                out.add(emb.to_json())
    return out


def _order_preserving_merges(seqs: list[list]):
    """All interleavings of the given sequences keeping each in order."""
    if all(not s for s in seqs):
        yield []
        return
    for i, s in enumerate(seqs):
        if not s:
            continue
        rest = [list(x) for x in seqs]
        head = rest[i].pop(0)
        for tail in _order_preserving_merges(rest):
            yield [head] + tail


def enumerate_arrangements(
    v: int, block_rotations: list[Rotation], guard_degree: int = 9
) -> set[tuple]:
    """All planar cyclic merges at v of fixed block embeddings.

    Returns the set of rotations at v (canonical cyclic tuples of
    neighbors).  Each block's cyclic order at v survives as a cyclic
    subsequence; candidates failing Euler's check are dropped.
    """
    locals_at_v = [rot[v] for rot in block_rotations]
    delta_v = sum(len(s) for s in locals_at_v)
    if delta_v > guard_degree:
        raise TooLarge(f"degree {delta_v} exceeds the arrangement guard")

    anchor = locals_at_v[0][0]
    first_rest = locals_at_v[0][1:]
    out: set[tuple] = set()
    offset_space = [range(len(s)) for s in locals_at_v[1:]]
    for offsets in itertools.product(*offset_space):
        rotated = [
            s[k:] + s[:k] for s, k in zip(locals_at_v[1:], offsets)
        ]
        for merged in _order_preserving_merges([list(first_rest), *map(list, rotated)]):
            candidate = [anchor] + merged
            rot: Rotation = {}
            for block_rot in block_rotations:
                for x, nbrs in block_rot.items():
                    if x != v:
                        rot[x] = list(nbrs)
            rot[v] = candidate
            n_all = len(rot)
            m_all = sum(len(x) for x in rot.values()) // 2
            if n_all - m_all + face_count(rot) == 2:
                out.add(canonical_cycle(candidate))
    return out
