"""Embeddings of a disconnected graph: nesting trees and face tuples.

Two disjoint triangles have 12 embeddings: three nesting shapes (side by
side, one inside the other, and the converse) times two outer faces each.
The nesting tree edges read (parent, child, label); parent 0 is the dummy
root, and a label picks the hosting inner face of the parent component.
"""

from planarrank import EmbeddingRanker, Graph

g = Graph(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])
ranker = EmbeddingRanker(g)

print(f"components: 2 triangles, face counts {ranker.face_counts}")
print(f"tuple bounds: {ranker.bounds}  ->  {ranker.count()} embeddings")
print()

for r in range(ranker.count()):
    emb = ranker.unrank(r)
    print(f"rank {r:2d}: nesting {emb.nesting}  face tuple {emb.face_tuple}")
