# filename: utils/exactlin.py

"""
Exact linear algebra over the rationals.

Every structure constant in the library lives in a ``MultiMap``: a dense
numpy object array of ``fractions.Fraction`` indexed by
(output index, input 1 index, ..., input n index). A ``Lin`` is the arity-1
case. Maps are immutable; every operation returns a new map.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

import numpy as np

from utils.errors import DimensionError

logger = logging.getLogger(__name__)

Vector = tuple[Fraction, ...]

_to_fractions = np.vectorize(Fraction, otypes=[object])


def _zeros(shape: Sequence[int]) -> np.ndarray:
    arr = np.empty(tuple(shape), dtype=object)
    arr.fill(Fraction(0))
    return arr


def _contract(a: np.ndarray, axis_a: int, b: np.ndarray, axis_b: int) -> np.ndarray:
    """tensordot over one pair of axes; free axes of ``a`` come first, then those of ``b``."""
    if a.shape[axis_a] != b.shape[axis_b]:
        raise DimensionError(f"cannot contract axis of length {a.shape[axis_a]} with {b.shape[axis_b]}")
    if a.shape[axis_a] == 0:
        # numpy fills empty object contractions with int 0 (or None on old releases)
        shape = a.shape[:axis_a] + a.shape[axis_a + 1:] + b.shape[:axis_b] + b.shape[axis_b + 1:]
        return _zeros(shape)
    return np.tensordot(a, b, axes=([axis_a], [axis_b]))


def vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Space:
    """A finite-dimensional space with a fixed basis; only ``dim`` takes part in equality."""

    dim: int
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionError(f"negative dimension {self.dim}")

    def zero(self) -> Vector:
        return tuple(Fraction(0) for _ in range(self.dim))

    def basis_vector(self, k: int) -> Vector:
        return tuple(Fraction(int(j == k)) for j in range(self.dim))


def direct_sum(*parts: Space, label: str | None = None) -> Space:
    return Space(sum(p.dim for p in parts), label if label is not None else "⊕".join(p.label for p in parts))


class MultiMap:
    """A multilinear map ``srcs[0] x ... x srcs[n-1] -> dst`` with exact coefficients.

    Arity 0 is allowed and stands for a constant vector of ``dst``.
    """

    __slots__ = ("srcs", "dst", "coeffs")

    def __init__(self, srcs: Sequence[Space], dst: Space, coeffs, *, _trusted: bool = False):
        srcs = tuple(srcs)
        expected = (dst.dim,) + tuple(s.dim for s in srcs)
        if _trusted:
            arr = coeffs
        else:
            arr = np.asarray(coeffs, dtype=object)
            if arr.size == 0 and arr.shape != expected and int(np.prod(expected)) == 0:
                arr = _zeros(expected)
            arr = _to_fractions(arr) if arr.size else _zeros(arr.shape)
        if arr.shape != expected:
            raise DimensionError(f"coefficient shape {arr.shape} does not match declared {expected}")
        arr.flags.writeable = False
        self.srcs = srcs
        self.dst = dst
        self.coeffs = arr

    # -- construction -----------------------------------------------------

    @classmethod
    def from_entries(cls, srcs: Sequence[Space], dst: Space, entries: Iterable[tuple[Sequence[int], object]]) -> "MultiMap":
        srcs = tuple(srcs)
        shape = (dst.dim,) + tuple(s.dim for s in srcs)
        arr = _zeros(shape)
        for index, value in entries:
            index = tuple(int(i) for i in index)
            if len(index) != len(shape) or any(not 0 <= i < n for i, n in zip(index, shape)):
                raise DimensionError(f"index {index} out of range for shape {shape}")
            arr[index] = Fraction(value)
        return _wrap(srcs, dst, arr)

    @classmethod
    def from_function(cls, srcs: Sequence[Space], dst: Space, fn: Callable[..., Sequence]) -> "MultiMap":
        """Build from ``fn(i1, ..., in)`` giving the image of a tuple of basis vectors."""
        srcs = tuple(srcs)
        arr = _zeros((dst.dim,) + tuple(s.dim for s in srcs))
        for idx in np.ndindex(*(s.dim for s in srcs)):
            image = fn(*idx)
            if len(image) != dst.dim:
                raise DimensionError(f"image of {idx} has length {len(image)}, expected {dst.dim}")
            for out, value in enumerate(image):
                arr[(out,) + idx] = Fraction(value)
        return _wrap(srcs, dst, arr)

    # -- inspection -------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.srcs)

    def signature(self) -> tuple[tuple[int, ...], int]:
        return tuple(s.dim for s in self.srcs), self.dst.dim

    def is_zero(self) -> bool:
        return not bool((self.coeffs != 0).any())

    def column(self, *idx: int) -> Vector:
        return tuple(self.coeffs[(slice(None),) + tuple(idx)])

    def nonzero_entries(self) -> list[tuple[tuple[int, ...], Fraction]]:
        hits = np.argwhere(self.coeffs != 0) if self.coeffs.size else []
        return sorted((tuple(int(i) for i in row), self.coeffs[tuple(row)]) for row in hits)

    def diff_points(self, other: "MultiMap") -> list[tuple[int, ...]]:
        """Input basis tuples on which ``self`` and ``other`` disagree."""
        _require_same_shape(self, other)
        if not self.coeffs.size:
            return []
        hits = np.argwhere((self.coeffs - other.coeffs) != 0)
        return sorted({tuple(int(i) for i in row[1:]) for row in hits})

    # -- evaluation and composition ---------------------------------------

    def apply(self, *args: Sequence) -> Vector:
        if len(args) != self.arity:
            raise DimensionError(f"expected {self.arity} arguments, got {len(args)}")
        res = self.coeffs
        for space, arg in zip(reversed(self.srcs), reversed(args)):
            if len(arg) != space.dim:
                raise DimensionError(f"argument of length {len(arg)} given for a space of dim {space.dim}")
            vec = _zeros((space.dim,))
            for k, value in enumerate(arg):
                vec[k] = Fraction(value)
            res = _contract(res, res.ndim - 1, vec, 0)
        return tuple(Fraction(v) for v in res)

    def insert(self, slot: int, inner: "MultiMap") -> "MultiMap":
        """Substitute ``inner`` into input ``slot``; its inputs take that slot's place."""
        if not 0 <= slot < self.arity:
            raise DimensionError(f"slot {slot} out of range for arity {self.arity}")
        if inner.dst != self.srcs[slot]:
            raise DimensionError(
                f"cannot insert a map into {inner.dst.label or inner.dst.dim} in a slot over {self.srcs[slot].label or self.srcs[slot].dim}"
            )
        res = _contract(self.coeffs, slot + 1, inner.coeffs, 0)
        n_inner = inner.arity
        if n_inner != 1 or slot + 1 != res.ndim - 1:
            tail = list(range(res.ndim - n_inner, res.ndim))
            res = np.moveaxis(res, tail, list(range(slot + 1, slot + 1 + n_inner)))
        srcs = self.srcs[:slot] + inner.srcs + self.srcs[slot + 1:]
        return _wrap(srcs, self.dst, np.ascontiguousarray(res))

    def precompose(self, slot: int, f: "Lin") -> "MultiMap":
        return self.insert(slot, f)

    def postcompose(self, f: "Lin") -> "MultiMap":
        if f.src != self.dst:
            raise DimensionError(f"cannot postcompose a map out of dim {f.src.dim} onto values in dim {self.dst.dim}")
        res = _contract(f.coeffs, 1, self.coeffs, 0)
        return _wrap(self.srcs, f.dst, res)

    def with_inputs(self, *lins: "Lin | None") -> "MultiMap":
        """Precompose slot k with ``lins[k]``; ``None`` leaves the slot alone."""
        if len(lins) != self.arity:
            raise DimensionError(f"expected {self.arity} maps, got {len(lins)}")
        out = self
        for slot, f in enumerate(lins):
            if f is not None:
                out = out.precompose(slot, f)
        return out

    def permute(self, order: Sequence[int]) -> "MultiMap":
        """``g(y_0, ..., y_{n-1}) = self(x)`` where ``x[order[j]] = y_j``."""
        if sorted(order) != list(range(self.arity)):
            raise DimensionError(f"{order} is not a permutation of {self.arity} slots")
        res = np.transpose(self.coeffs, [0] + [o + 1 for o in order])
        return _wrap([self.srcs[o] for o in order], self.dst, np.ascontiguousarray(res))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "MultiMap") -> "MultiMap":
        _require_same_shape(self, other)
        return _wrap(self.srcs, self.dst, self.coeffs + other.coeffs)

    def __sub__(self, other: "MultiMap") -> "MultiMap":
        _require_same_shape(self, other)
        return _wrap(self.srcs, self.dst, self.coeffs - other.coeffs)

    def __neg__(self) -> "MultiMap":
        return _wrap(self.srcs, self.dst, -self.coeffs)

    def __mul__(self, scalar) -> "MultiMap":
        if isinstance(scalar, MultiMap):
            return NotImplemented
        return _wrap(self.srcs, self.dst, self.coeffs * Fraction(scalar))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiMap):
            return NotImplemented
        return self.signature() == other.signature() and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        srcs = ", ".join(s.label or str(s.dim) for s in self.srcs)
        return f"{type(self).__name__}(({srcs}) -> {self.dst.label or self.dst.dim}, nonzero={len(self.nonzero_entries())})"


class Lin(MultiMap):
    """A linear map, stored as a ``dst.dim x src.dim`` matrix."""

    __slots__ = ()

    def __init__(self, src: Space, dst: Space, coeffs, *, _trusted: bool = False):
        super().__init__((src,), dst, coeffs, _trusted=_trusted)

    @property
    def src(self) -> Space:
        return self.srcs[0]

    @property
    def matrix(self) -> np.ndarray:
        return self.coeffs

    def rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self.coeffs]

    def __matmul__(self, other: "Lin") -> "Lin":
        return compose_lin(self, other)


def _wrap(srcs: Sequence[Space], dst: Space, arr: np.ndarray) -> MultiMap:
    srcs = tuple(srcs)
    if len(srcs) == 1:
        return Lin(srcs[0], dst, arr, _trusted=True)
    return MultiMap(srcs, dst, arr, _trusted=True)


def _require_same_shape(a: MultiMap, b: MultiMap):
    if a.signature() != b.signature():
        raise DimensionError(f"shape mismatch: {a.signature()} vs {b.signature()}")


def zero_map(srcs: Sequence[Space], dst: Space) -> MultiMap:
    srcs = tuple(srcs)
    return _wrap(srcs, dst, _zeros((dst.dim,) + tuple(s.dim for s in srcs)))


def zero_lin(src: Space, dst: Space) -> Lin:
    return zero_map((src,), dst)


def identity(space: Space) -> Lin:
    arr = _zeros((space.dim, space.dim))
    for k in range(space.dim):
        arr[k, k] = Fraction(1)
    return Lin(space, space, arr, _trusted=True)


def constant(dst: Space, values: Sequence) -> MultiMap:
    """The arity-0 map holding a single vector."""
    return MultiMap((), dst, [Fraction(v) for v in values])


def lin_from_rows(src: Space, dst: Space, rows: Sequence[Sequence]) -> Lin:
    arr = _zeros((dst.dim, src.dim))
    if len(rows) != dst.dim or any(len(r) != src.dim for r in rows):
        raise DimensionError(f"expected a {dst.dim}x{src.dim} matrix")
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            arr[i, j] = Fraction(value)
    return Lin(src, dst, arr, _trusted=True)


def lin_from_columns(dst: Space, columns: Sequence[Sequence], src: Space | None = None) -> Lin:
    src = src if src is not None else Space(len(columns))
    if src.dim != len(columns):
        raise DimensionError(f"{len(columns)} columns given for a source of dim {src.dim}")
    return lin_from_rows(src, dst, [[col[i] for col in columns] for i in range(dst.dim)])


def compose_lin(g: Lin, f: Lin) -> Lin:
    """``g ∘ f``."""
    if f.dst != g.src:
        raise DimensionError(f"cannot compose: f lands in dim {f.dst.dim}, g starts at dim {g.src.dim}")
    return Lin(f.src, g.dst, _contract(g.coeffs, 1, f.coeffs, 0), _trusted=True)


def twist_slots(m: MultiMap, lins: Sequence[Lin | None]) -> MultiMap:
    """Precompose slot k with ``Id + lins[k]`` (slots given ``None`` are left alone)."""
    return m.with_inputs(*(None if f is None else identity(f.src) + f for f in lins))


def subset_sum(m: MultiMap, lins: Sequence[Lin]) -> MultiMap:
    """Sum of ``m`` with ``lins[k]`` inserted in every nonempty set of slots."""
    return twist_slots(m, lins) - m


# -- direct sums --------------------------------------------------------------


def _offset(parts: Sequence[Space], k: int) -> int:
    return sum(p.dim for p in parts[:k])


def injection(parts: Sequence[Space], k: int) -> Lin:
    total = direct_sum(*parts)
    arr = _zeros((total.dim, parts[k].dim))
    start = _offset(parts, k)
    for j in range(parts[k].dim):
        arr[start + j, j] = Fraction(1)
    return Lin(parts[k], total, arr, _trusted=True)


def projection(parts: Sequence[Space], k: int) -> Lin:
    total = direct_sum(*parts)
    arr = _zeros((parts[k].dim, total.dim))
    start = _offset(parts, k)
    for j in range(parts[k].dim):
        arr[j, start + j] = Fraction(1)
    return Lin(total, parts[k], arr, _trusted=True)


def block_diag(*lins: Lin) -> Lin:
    srcs = [f.src for f in lins]
    dsts = [f.dst for f in lins]
    out = zero_lin(direct_sum(*srcs), direct_sum(*dsts))
    for k, f in enumerate(lins):
        out = out + injection(dsts, k) @ f @ projection(srcs, k)
    return out


# -- elimination --------------------------------------------------------------


def _primitive(ints: list[int]) -> list[int]:
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    return _primitive([int(x * den) for x in row])


def row_reduce(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Elimination runs on integer rows (cross multiplication, then division by
    the row content); only the final normalization produces fractions.
    """
    work = [_integer_row([Fraction(x) for x in r]) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pick = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pick is None:
            continue
        work[r], work[pick] = work[pick], work[r]
        a = work[r][c]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                b = work[i][c]
                work[i] = _primitive([a * x - b * y for x, y in zip(work[i], work[r])])
        pivots.append(c)
        r += 1
    reduced = [[Fraction(x, work[k][pivots[k]]) for x in work[k]] for k in range(len(pivots))]
    return reduced, pivots


def kernel_basis(f: Lin) -> list[Vector]:
    n = f.src.dim
    reduced, pivots = row_reduce(f.rows(), n)
    basis = []
    for j in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for k, pc in enumerate(pivots):
            v[pc] = -reduced[k][j]
        basis.append(tuple(v))
    return basis


def kernel_map(f: Lin, label: str = "") -> Lin:
    """Inclusion of ``ker f`` with the basis returned by ``kernel_basis``."""
    basis = kernel_basis(f)
    return lin_from_columns(f.src, basis, Space(len(basis), label or f"ker({f.src.label})"))


def rank(f: Lin) -> int:
    return len(row_reduce(f.rows(), f.src.dim)[1])


def inverse(f: Lin) -> Lin:
    n = f.src.dim
    if f.dst.dim != n:
        raise DimensionError(f"a {f.dst.dim}x{n} matrix has no inverse")
    augmented = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(f.rows())]
    reduced, pivots = row_reduce(augmented, 2 * n)
    if pivots[:n] != list(range(n)):
        raise DimensionError("matrix is singular")
    return lin_from_rows(f.dst, f.src, [row[n:] for row in reduced])


def left_inverse(f: Lin) -> Lin:
    """A map ``L`` with ``L ∘ f = Id``; on the image of ``f`` it returns coordinates."""
    k = f.src.dim
    transposed = [[f.coeffs[i, j] for i in range(f.dst.dim)] for j in range(k)]
    _, pivots = row_reduce(transposed, f.dst.dim)
    if len(pivots) != k:
        raise DimensionError("map is not injective")
    square = lin_from_rows(f.src, f.src, [[f.coeffs[p, j] for j in range(k)] for p in pivots])
    select = lin_from_rows(f.dst, f.src, [[Fraction(int(c == p)) for c in range(f.dst.dim)] for p in pivots])
    return inverse(square) @ select
