"""Bit-vector vertices, highest-differing-coordinate sequences, and the
constructive conversion of subsequence witnesses back into vertex witnesses.

A vertex of the doubled universe is an element of {0,1}^m.  Coordinate
``i`` (1-based, ``i`` in 1..m) is the i-th least significant bit of the
vertex value, so the coordinate order ``v < w  iff  v and w differ highest
at coordinate d and v_d < w_d`` coincides with integer order on the values
(tested exhaustively).  Widths are explicit; mixing widths is an error,
not a coercion.  Python integers are arbitrary precision, so widths of
2^7 coordinates and beyond (vertices of twice-doubled universes) need no
special representation.

Vertex-set files carry an ``m=<width>`` header line followed by decimal
vertex values, one per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .errors import FileFormatError, ParameterError, PreconditionError
from . import seqpat

__all__ = [
    "BinVertex",
    "DeltaSeq",
    "delta",
    "delta_bits",
    "delta_sequence",
    "delta_sequence_of_ints",
    "check_unique_and_max",
    "realize_max_induced",
    "realize_separated",
    "parse_vertex_file",
    "format_vertex_file",
]


@total_ordering
@dataclass(frozen=True)
class BinVertex:
    """A vertex of {0,1}^m, stored as an integer in [0, 2^m)."""

    value: int
    width: int

    def __post_init__(self):
        if self.width < 1:
            raise ParameterError("width must be positive")
        if not 0 <= self.value < (1 << self.width):
            raise ParameterError(
                f"value {self.value} out of range for width {self.width}"
            )

    def coordinate(self, i: int) -> int:
        """The i-th coordinate (1-based, least significant first)."""
        if not 1 <= i <= self.width:
            raise ParameterError(f"coordinate {i} out of range 1..{self.width}")
        return (self.value >> (i - 1)) & 1

    def _check_same_width(self, other: "BinVertex"):
        if self.width != other.width:
            raise ParameterError(
                f"mixed widths {self.width} and {other.width}"
            )

    def __lt__(self, other: "BinVertex") -> bool:
        self._check_same_width(other)
        return self.value < other.value

    def __repr__(self) -> str:
        return f"BinVertex({self.value}, m={self.width})"


def delta_bits(a: int, b: int) -> int:
    """Highest differing coordinate of two same-width vertex values."""
    if a == b:
        raise ParameterError("delta of equal vertices is undefined")
    return (a ^ b).bit_length()


def delta(v: BinVertex, w: BinVertex) -> int:
    """Highest coordinate at which ``v`` and ``w`` differ (in 1..m)."""
    v._check_same_width(w)
    return delta_bits(v.value, w.value)


@dataclass(frozen=True)
class DeltaSeq:
    """Sorted distinct host vertices together with their consecutive deltas."""

    vertices: tuple[BinVertex, ...]
    deltas: tuple[int, ...]

    @property
    def width(self) -> int:
        return self.vertices[0].width

    def __len__(self) -> int:
        return len(self.deltas)


def delta_sequence(vertices) -> DeltaSeq:
    """Consecutive-delta sequence of a strictly increasing vertex list."""
    vs = tuple(vertices)
    if not vs:
        raise ParameterError("at least one vertex is required")
    for a, b in zip(vs, vs[1:]):
        a._check_same_width(b)
        if not a.value < b.value:
            raise ParameterError(
                f"vertices must be strictly increasing, got {a.value} before {b.value}"
            )
    return DeltaSeq(
        vertices=vs,
        deltas=tuple(delta(a, b) for a, b in zip(vs, vs[1:])),
    )


def delta_sequence_of_ints(values, width: int) -> DeltaSeq:
    """Convenience constructor from raw integer vertex values."""
    return delta_sequence(BinVertex(v, width) for v in values)


def check_unique_and_max(ds) -> bool:
    """Self-test oracle for the two structural facts about delta sequences.

    For a :class:`DeltaSeq`, checks that (a) every interval of the delta
    sequence attains its maximum exactly once and (b) for every pair of
    host vertices the delta equals the maximum of the consecutive deltas
    between them.  A plain sequence may be passed instead, in which case
    only the interval part is checkable.
    """
    if isinstance(ds, DeltaSeq):
        seq = ds.deltas
        if not seqpat.unique_maximum_property(seq):
            return False
        vs = ds.vertices
        n = len(vs)
        for i in range(n):
            running = 0
            for j in range(i + 1, n):
                running = max(running, seq[j - 1])
                if delta(vs[i], vs[j]) != running:
                    return False
        return True
    return seqpat.unique_maximum_property(tuple(ds))


def realize_max_induced(ds: DeltaSeq, ix) -> tuple[BinVertex, ...]:
    """Vertices whose consecutive deltas equal the chosen delta subsequence.

    ``ix`` must be a max-induced index set of the delta sequence; the
    returned ``len(ix) + 1`` host vertices ``w_1 < ... < w_{t+1}`` satisfy
    ``delta(w_s, w_{s+1}) = deltas[ix[s]]`` exactly.  The witness is the
    canonical one: start at the first chosen position's left vertex and,
    at each later position, step to the gap's right vertex when the delta
    grows and stay at the chosen position's left vertex otherwise.  Other
    valid witnesses exist; callers must check the delta equalities, not
    vertex identity.
    """
    seq = ds.deltas
    ix = seqpat._as_indices(ix, len(seq))
    if not ix:
        raise ParameterError("index set must be non-empty")
    if not seqpat.is_max_induced(seq, ix):
        raise PreconditionError(f"{ix} is not max-induced in {seq}")
    vs = ds.vertices
    out = [vs[ix[0] - 1]]
    for s in range(1, len(ix)):
        if seq[ix[s - 1] - 1] < seq[ix[s] - 1]:
            out.append(vs[ix[s - 1]])  # right endpoint of the previous gap
        else:
            out.append(vs[ix[s] - 1])
    out.append(vs[ix[-1]])
    return tuple(out)


def realize_separated(ds: DeltaSeq, ix) -> tuple[BinVertex, ...]:
    """Consecutive host pairs realizing a separated delta subsequence.

    For each chosen position ``i`` the pair ``(v_i, v_{i+1})`` is emitted;
    separation makes the 2t vertices strictly increasing, and each pair's
    delta is the chosen value by definition.
    """
    seq = ds.deltas
    ix = seqpat._as_indices(ix, len(seq))
    if not ix:
        raise ParameterError("index set must be non-empty")
    for a, b in zip(ix, ix[1:]):
        if b <= a + 1:
            raise PreconditionError(f"{ix} is not separated: {b} <= {a} + 1")
    vs = ds.vertices
    out = []
    for i in ix:
        out.append(vs[i - 1])
        out.append(vs[i])
    return tuple(out)


def parse_vertex_file(text: str, path=None) -> tuple[BinVertex, ...]:
    """Parse an ``m=`` headed vertex-set file into vertices."""
    width = None
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if width is None:
            if not line.startswith("m="):
                raise FileFormatError(
                    "expected 'm=<width>' header before vertex values",
                    path=path,
                    line=lineno,
                )
            try:
                width = int(line[2:])
            except ValueError:
                raise FileFormatError(
                    f"bad width {line[2:]!r}", path=path, line=lineno
                ) from None
            continue
        for tok in line.split():
            try:
                value = int(tok)
            except ValueError:
                raise FileFormatError(
                    f"bad vertex value {tok!r}", path=path, line=lineno
                ) from None
            try:
                out.append(BinVertex(value, width))
            except ParameterError as exc:
                raise FileFormatError(str(exc), path=path, line=lineno) from None
    if width is None:
        raise FileFormatError("empty vertex file", path=path)
    return tuple(out)


def format_vertex_file(vertices) -> str:
    vs = tuple(vertices)
    if not vs:
        raise ParameterError("at least one vertex is required")
    lines = [f"m={vs[0].width}"]
    lines.extend(str(v.value) for v in vs)
    return "\n".join(lines) + "\n"
