"""Exception types shared across the package."""


class PlanarRankError(Exception):
    """Base class for all errors raised by planarrank."""


class MalformedInput(PlanarRankError):
    """Graph or embedding data violates the documented JSON schema."""


class EdgelessComponent(MalformedInput):
    """A vertex (or component) carries no edge; face labels are undefined."""


class NotConnected(PlanarRankError):
    """Operation requires a connected graph."""


class NotBiconnected(PlanarRankError):
    """Operation requires a biconnected graph."""


class NotPlanar(PlanarRankError):
    """Graph admits no planar embedding."""


class BoundViolation(PlanarRankError):
    """A tuple element is outside its declared bound."""


class RankOutOfRange(PlanarRankError):
    """A rank does not address any object in the bijection's codomain."""


class NotAPermutation(PlanarRankError):
    """Input is not a bijection on 0..k-1."""


class MalformedTree(PlanarRankError):
    """Input is not a valid (rooted, labelled) tree."""


class LabelOutOfRange(PlanarRankError):
    """A nesting label lies outside the admissible interval."""


class GraphMismatch(PlanarRankError):
    """Two embeddings do not share the same underlying graph."""


class UnknownFace(PlanarRankError):
    """A face identifier does not address a face of the embedding."""


class IncompleteChoices(PlanarRankError):
    """A skeleton embedding choice is missing for some P- or R-node."""


class EmbeddingMismatch(PlanarRankError):
    """An embedding is inconsistent with the structure it is ranked against."""


class TooLarge(PlanarRankError):
    """Brute-force enumeration guard tripped; refusing partial output."""
