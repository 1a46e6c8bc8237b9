"""Random planar graph builder shared by tests.

Graphs are grown by gluing small biconnected blocks at existing vertices,
so they are planar by construction and exercise every layer: multiple
components, cut vertices with mixed block degrees, P- and R-nodes.
"""

import random

from planarrank.graph import Graph

# Block templates as local edge lists; vertex 0 is the glue point.
TEMPLATES = [
    [(0, 1)],                                               # bridge
    [(0, 1), (0, 2), (1, 2)],                               # triangle
    [(0, 1), (1, 2), (2, 3), (0, 3)],                       # C4
    [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)],               # theta
    [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)],               # diamond
    [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],       # K4
    [(0, 1), (0, 2), (0, 3), (0, 4),
     (1, 2), (2, 3), (3, 4), (1, 4)],                       # wheel W4
]


def random_planar(n_target: int, seed: int, max_degree: int = 8,
                  components: int | None = None) -> Graph:
    rng = random.Random(seed)
    if components is None:
        components = rng.randint(1, max(1, min(4, n_target // 3)))
    quotas = [n_target // components] * components
    quotas[0] += n_target % components

    edges = []
    next_id = 1
    degree: dict[int, int] = {}

    def place(template, glue):
        nonlocal next_id
        mapping = {}
        if glue is not None:
            mapping[0] = glue
        for a, b in template:
            for x in (a, b):
                if x not in mapping:
                    mapping[x] = next_id
                    next_id += 1
        for a, b in template:
            u, v = mapping[a], mapping[b]
            edges.append((min(u, v), max(u, v)))
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        return [mapping[x] for x in sorted(mapping)]

    for quota in quotas:
        grown = place(rng.choice(TEMPLATES), None)
        comp_vertices = list(grown)
        while len(comp_vertices) < quota:
            glue = None
            for _ in range(32):  # rejection sampling against the degree cap
                cand = comp_vertices[rng.randrange(len(comp_vertices))]
                if degree[cand] < max_degree:
                    glue = cand
                    break
            if glue is None:
                break
            template = rng.choice(TEMPLATES)
            comp_vertices.extend(place(template, glue)[1:])
    return Graph(next_id - 1, edges)
