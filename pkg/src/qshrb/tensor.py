"""Sparse elements of the truncated tensor algebra T(V) and of T(V) (x) T(V).

Basis words are tuples of 0-based letter indices; the empty tuple is the
scalar component.  Coefficients are stored in the kernel's raw form and are
exposed as :class:`~qshrb.scalar.Scalar`.
"""

from __future__ import annotations

import itertools
import os
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DegreeOverflow, DimensionMismatch
from .kernel import c_iszero, lc_add, lc_apply, lc_filter, lc_scale, lc_sub
from .scalar import Scalar, to_raw

Word = tuple

ENV_DEGREE_BOUND = "QSHRB_DEGREE_BOUND"


def default_bound() -> int:
    """Session degree bound N (env ``QSHRB_DEGREE_BOUND``, default 5)."""
    raw = os.environ.get(ENV_DEGREE_BOUND)
    if raw:
        n = int(raw)
        if n < 1:
            raise ValueError(f"{ENV_DEGREE_BOUND} must be >= 1")
        return n
    return 5


def key_order(key):
    """Deterministic term order: by degree, then lexicographically."""
    if isinstance(key, tuple) and len(key) == 2 and isinstance(key[0], int) and isinstance(key[1], tuple):
        # head ⊗̲ tail keys
        return (1 + len(key[1]), key)
    if isinstance(key, tuple) and key and isinstance(key[0], tuple):
        return (sum(len(k) if isinstance(k, tuple) else 1 for k in key), key)
    if isinstance(key, tuple):
        return (len(key), key)
    return (0, key)


def words(dim: int, max_len: int, min_len: int = 0) -> Iterator[Word]:
    """All words over ``dim`` letters, ordered by length then lexicographically."""
    for n in range(min_len, max_len + 1):
        yield from itertools.product(range(dim), repeat=n)


def default_names(dim: int) -> list[str]:
    return [f"e{i + 1}" for i in range(dim)]


def format_word(word: Word, names: Sequence[str] | None = None, sep: str = "⊗") -> str:
    if not word:
        return "1"
    if names is None:
        return sep.join(f"e{i + 1}" for i in word)
    return sep.join(names[i] for i in word)


def format_terms(raw_terms: dict, fmt_key: Callable[[object], str], pretty: bool = True) -> str:
    """Render a raw combination in deterministic order, e.g. ``q·e1⊗e2 + (2−q²)·e2⊗e1``."""
    if not raw_terms:
        return "0"
    dot = "·" if pretty else "*"
    minus = "−" if pretty else "-"
    out = []
    for key in sorted(raw_terms, key=key_order):
        c = Scalar.from_raw(raw_terms[key])
        body = fmt_key(key)
        neg = False
        if c.n_terms() == 1 and next(iter(c.terms().values())) < 0:
            neg = True
            c = -c
        if body == "1":
            text = c.pretty() if pretty else c.to_ascii()
            if c.n_terms() > 1:
                text = f"({text})"
        elif c == 1:
            text = body
        else:
            cs = c.pretty() if pretty else c.to_ascii()
            if c.n_terms() > 1:
                cs = f"({cs})"
            text = f"{cs}{dot}{body}"
        if not out:
            out.append(f"{minus}{text}" if neg else text)
        else:
            out.append(f" {minus} {text}" if neg else f" + {text}")
    return "".join(out)


class LinComb:
    """Finitely supported linear combination of hashable basis keys."""

    __slots__ = ("_t",)

    def __init__(self, terms: dict | None = None):
        t = {}
        if terms:
            for k, v in terms.items():
                r = to_raw(v)
                if not c_iszero(r):
                    t[k] = r
        self._t = t

    def _new(self, raw: dict):
        out = object.__new__(type(self))
        out._t = raw
        return out

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    @property
    def raw(self) -> dict:
        return self._t

    def __add__(self, other):
        self._check(other)
        return self._new(lc_add(self._t, other._t))

    def __sub__(self, other):
        self._check(other)
        return self._new(lc_sub(self._t, other._t))

    def __neg__(self):
        return self._new(lc_scale(self._t, -1))

    def scale(self, c):
        return self._new(lc_scale(self._t, to_raw(c)))

    def __mul__(self, c):
        if isinstance(c, LinComb):
            return NotImplemented
        try:
            return self.scale(c)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return type(self) is type(other) and self._t == other._t and self._meta() == other._meta()
        if isinstance(other, int) and other == 0:
            return not self._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((k, Scalar.from_raw(v)) for k, v in self._t.items()))

    def _meta(self):
        return ()

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def support(self) -> list:
        return sorted(self._t, key=key_order)

    def items(self) -> list[tuple[object, Scalar]]:
        return [(k, Scalar.from_raw(self._t[k])) for k in self.support()]

    def coefficient(self, key) -> Scalar:
        return Scalar.from_raw(self._t.get(key, 0))

    def map_coefficients(self, f: Callable[[Scalar], object]):
        out = {}
        for k, v in self._t.items():
            r = to_raw(f(Scalar.from_raw(v)))
            if not c_iszero(r):
                out[k] = r
        return self._new(out)

    def filter(self, pred: Callable[[object], bool]):
        return self._new(lc_filter(self._t, pred))

    def format(self, fmt_key: Callable[[object], str] = str, pretty: bool = True) -> str:
        return format_terms(self._t, fmt_key, pretty)

    def __repr__(self):
        return f"{type(self).__name__}({self.format(repr, pretty=False)})"


class TensorElement(LinComb):
    """Element of T(V) truncated at degree ``bound``."""

    __slots__ = ("dim", "bound")

    def __init__(self, dim: int, terms: dict | None = None, bound: int | None = None):
        super().__init__(terms)
        self.dim = dim
        self.bound = default_bound() if bound is None else bound
        for w in self._t:
            if not isinstance(w, tuple):
                raise TypeError(f"words must be tuples, got {w!r}")
            if len(w) > self.bound:
                raise DegreeOverflow(f"word of length {len(w)} exceeds degree bound {self.bound}")
            for letter in w:
                if not 0 <= letter < dim:
                    raise DimensionMismatch(f"letter {letter} out of range for dimension {dim}")

    @classmethod
    def from_raw(cls, dim: int, raw: dict, bound: int | None = None) -> "TensorElement":
        out = object.__new__(cls)
        out._t = raw
        out.dim = dim
        out.bound = default_bound() if bound is None else bound
        return out

    @classmethod
    def word(cls, dim: int, word: Sequence[int], coeff=1, bound: int | None = None):
        return cls(dim, {tuple(word): coeff}, bound)

    @classmethod
    def scalar(cls, dim: int, c=1, bound: int | None = None):
        return cls(dim, {(): c}, bound)

    @classmethod
    def zero(cls, dim: int, bound: int | None = None):
        return cls(dim, None, bound)

    def _new(self, raw):
        return TensorElement.from_raw(self.dim, raw, self.bound)

    def _meta(self):
        return (self.dim,)

    def _check(self, other):
        super()._check(other)
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        return TensorElement.from_raw(self.dim, lc_add(self._t, other._t), max(self.bound, other.bound))

    def __sub__(self, other):
        self._check(other)
        return TensorElement.from_raw(self.dim, lc_sub(self._t, other._t), max(self.bound, other.bound))

    def grade(self, n: int) -> "TensorElement":
        """Homogeneous component of degree ``n``."""
        return self._new(lc_filter(self._t, lambda w: len(w) == n))

    def degrees(self) -> list[int]:
        return sorted({len(w) for w in self._t})

    def top_degree(self) -> int:
        return max((len(w) for w in self._t), default=-1)

    def is_homogeneous(self, n: int | None = None) -> bool:
        ds = self.degrees()
        if n is None:
            return len(ds) <= 1
        return ds == [] or ds == [n]

    def with_bound(self, bound: int) -> "TensorElement":
        return TensorElement(self.dim, self._t, bound)

    def format(self, names: Sequence[str] | None = None, pretty: bool = True) -> str:
        return format_terms(self._t, lambda w: format_word(w, names), pretty)

    def __repr__(self):
        return f"TensorElement({self.format(pretty=False)})"


class PairElement(LinComb):
    """Element of T(V) ⊗̲ T(V); keys are pairs of words."""

    __slots__ = ("dim",)

    def __init__(self, dim: int, terms: dict | None = None):
        super().__init__(terms)
        self.dim = dim

    @classmethod
    def from_raw(cls, dim: int, raw: dict) -> "PairElement":
        out = object.__new__(cls)
        out._t = raw
        out.dim = dim
        return out

    def _new(self, raw):
        return PairElement.from_raw(self.dim, raw)

    def _meta(self):
        return (self.dim,)

    def _check(self, other):
        super()._check(other)
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def format(self, names: Sequence[str] | None = None, pretty: bool = True) -> str:
        sep = " ⊗̲ " if pretty else " | "
        return format_terms(
            self._t, lambda k: f"({format_word(k[0], names)}){sep}({format_word(k[1], names)})", pretty
        )

    def __repr__(self):
        return f"PairElement({self.format(pretty=False)})"


def concat(x: TensorElement, y: TensorElement) -> TensorElement:
    """Bilinear word concatenation (the product of T(V))."""
    if x.dim != y.dim:
        raise DimensionMismatch(f"dimension {x.dim} vs {y.dim}")
    bound = min(x.bound, y.bound)
    acc: dict = {}
    from .kernel import lc_apply2

    for u in x.raw:
        for v in y.raw:
            if len(u) + len(v) > bound:
                raise DegreeOverflow(
                    f"concatenation of degrees {len(u)} and {len(v)} exceeds bound {bound}", pair=(u, v)
                )
    acc = lc_apply2(x.raw, y.raw, lambda u, v: {u + v: 1})
    return TensorElement.from_raw(x.dim, acc, bound)


def _deconcat_word(w):
    return {(w[:i], w[i:]): 1 for i in range(len(w) + 1)}


def deconcat(x: TensorElement) -> PairElement:
    """Deconcatenation coproduct: v1..vn -> sum_i (v1..vi) ⊗̲ (v(i+1)..vn)."""
    return PairElement.from_raw(x.dim, lc_apply(x.raw, _deconcat_word))


def counit(x: TensorElement) -> Scalar:
    return Scalar.from_raw(x.raw.get((), 0))


def apply_on_words(x: TensorElement, f: Callable[[Word], dict], bound: int | None = None) -> TensorElement:
    """Extend a basis map (word -> raw combination of words) linearly."""
    return TensorElement.from_raw(x.dim, lc_apply(x.raw, f), x.bound if bound is None else bound)


def basis_elements(dim: int, max_len: int, min_len: int = 0, bound: int | None = None) -> Iterable[TensorElement]:
    for w in words(dim, max_len, min_len):
        yield TensorElement.word(dim, w, bound=bound)
