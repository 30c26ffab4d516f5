"""Braided vector spaces, braid-group lifts T^σ_w and the block braidings β_ij.

Permutations are tuples in one-line notation ``(w(1), ..., w(n))``.  A
permutation acts on tensors by moving the factor in position k to position
w(k); for the flip braiding T^σ_w is exactly that place permutation.  Words
of generators compose right to left: T^σ_w = σ_{i1} ∘ ... ∘ σ_{il}, so the
rightmost generator acts first.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Mapping, Sequence

from .checks import Carrier, check_ybe as _check_ybe_carrier
from .errors import DegreeMismatch, PositionOutOfRange, ValidationError
from .kernel import c_iszero, lc_apply, lc_splice, lc_sub
from .linalg import inverse, laurent_to_ratfunc
from .report import Report, Witness
from .scalar import Scalar, to_raw
from .tensor import TensorElement, Word, default_names, format_terms, format_word, words

Permutation = tuple


class BraidedSpace:
    """Finite-dimensional V with an invertible braiding σ given by structure constants.

    ``sigma[(i, j)]`` maps ``(k, l)`` to the coefficient of e_k⊗e_l in
    σ(e_i⊗e_j) (0-based indices).  Invertibility and the Yang-Baxter equation
    are validated on construction unless ``defer_checks`` is set.
    """

    def __init__(
        self,
        dim: int,
        sigma: Mapping,
        names: Sequence[str] | None = None,
        label: str = "",
        defer_checks: bool = False,
        inverse_sigma: Mapping | None = None,
    ):
        if dim < 1:
            raise ValidationError("a braided space needs dim >= 1")
        self.dim = dim
        self.names = list(names) if names is not None else default_names(dim)
        if len(self.names) != dim:
            raise ValidationError(f"{len(self.names)} names for dimension {dim}")
        self.label = label or "space"
        self._sig: dict = {}
        for i in range(dim):
            for j in range(dim):
                img = {}
                for (k, l), c in dict(sigma.get((i, j), {})).items():
                    if not (0 <= k < dim and 0 <= l < dim):
                        raise ValidationError(f"braiding index ({k}, {l}) out of range")
                    r = to_raw(c)
                    if not c_iszero(r):
                        img[(k, l)] = r
                self._sig[(i, j)] = img
        for key in sigma:
            if key not in self._sig:
                raise ValidationError(f"braiding index {key} out of range")
        self._inv = None
        if inverse_sigma is not None:
            self._inv = {
                (i, j): {kl: to_raw(c) for kl, c in dict(inverse_sigma.get((i, j), {})).items() if not c_iszero(to_raw(c))}
                for i in range(dim)
                for j in range(dim)
            }
        self._word_sigma: dict = {}
        self._word_sigma_inv: dict = {}
        self._beta: dict = {}
        self.deferred = defer_checks
        if not defer_checks:
            self.validate()

    # -- structure constants -------------------------------------------------

    def sigma_raw(self, i: int, j: int) -> dict:
        """σ(e_i⊗e_j) as a raw combination over letter pairs."""
        return self._sig[(i, j)]

    def sigma_table(self) -> dict:
        return {k: {kl: Scalar.from_raw(v) for kl, v in img.items()} for k, img in self._sig.items()}

    def matrix(self) -> list[list[Scalar]]:
        """σ as a d²×d² matrix; column (i,j) holds σ(e_i⊗e_j)."""
        d = self.dim
        idx = [(i, j) for i in range(d) for j in range(d)]
        return [[Scalar.from_raw(self._sig[c].get(r, 0)) for c in idx] for r in idx]

    def inverse_raw(self, i: int, j: int) -> dict:
        if self._inv is None:
            self._inv = self._compute_inverse()
        return self._inv[(i, j)]

    def _compute_inverse(self) -> dict:
        d = self.dim
        idx = [(i, j) for i in range(d) for j in range(d)]
        mat = [[laurent_to_ratfunc(Scalar.from_raw(self._sig[c].get(r, 0))) for c in idx] for r in idx]
        inv = inverse(mat)
        if inv is None:
            raise ValidationError(f"braiding of {self.label} is not invertible")
        out = {}
        for ci, c in enumerate(idx):
            img = {}
            for ri, r in enumerate(idx):
                x = inv[ri][ci]
                if x:
                    if not x.is_laurent():
                        raise ValidationError(
                            f"braiding of {self.label} is invertible over Q(q) but its inverse entry {x} is not a Laurent polynomial"
                        )
                    img[r] = x.to_scalar().raw
            out[c] = img
        return out

    def validate(self) -> None:
        self._inv = self._compute_inverse()
        rep = check_ybe(self)
        if not rep.passed:
            raise ValidationError(f"braiding of {self.label} violates the Yang-Baxter equation", rep)

    def carrier(self) -> Carrier:
        return Carrier(self.label, braid=self.sigma_raw, fmt=lambda k: self.names[k], sep="⊗")

    def letter_name(self, i: int) -> str:
        return self.names[i]

    def format(self, x: TensorElement, pretty: bool = True) -> str:
        return x.format(self.names, pretty)

    # -- word-level operators (memoised) ------------------------------------

    def word_sigma(self, word: Word, i: int) -> dict:
        """σ_i (1-based position) on a basis word."""
        key = (word, i)
        r = self._word_sigma.get(key)
        if r is None:
            r = lc_splice({word: 1}, i - 1, 2, lambda t: self._sig[t])
            self._word_sigma[key] = r
        return r

    def word_sigma_inverse(self, word: Word, i: int) -> dict:
        key = (word, i)
        r = self._word_sigma_inv.get(key)
        if r is None:
            r = lc_splice({word: 1}, i - 1, 2, lambda t: self.inverse_raw(*t))
            self._word_sigma_inv[key] = r
        return r

    def lift_raw(self, gens: Sequence[int], x: dict) -> dict:
        """Apply σ_{i1}∘...∘σ_{il} to a raw combination of words (rightmost first)."""
        for g in reversed(gens):
            x = lc_apply(x, lambda w, g=g: self.word_sigma(w, g))
        return x

    def beta_word(self, i: int, word: Word) -> dict:
        """β_{i,j} on a basis word of length i+j; result words split after j letters."""
        key = (i, word)
        r = self._beta.get(key)
        if r is None:
            j = len(word) - i
            if i == 0 or j == 0:
                r = {word: 1}
            elif j == 1 and i > 1:
                # β_{i,1} = σ_1 ∘ (id ⊗ β_{i-1,1})
                inner = self.beta_word(i - 1, word[1:])
                x = {(word[0],) + w: c for w, c in inner.items()}
                r = lc_apply(x, lambda w: self.word_sigma(w, 1))
            else:
                r = self.lift_raw(reduced_word(chi_perm(i, j)), {word: 1})
            self._beta[key] = r
        return r

    def beta_pair(self, u: Word, v: Word) -> dict:
        """β(u ⊗̲ v) as a raw combination over word pairs (|v|, |u|)."""
        j = len(v)
        return {(w[:j], w[j:]): c for w, c in self.beta_word(len(u), u + v).items()}

    def __repr__(self):
        return f"BraidedSpace({self.label!r}, dim={self.dim})"


# --- permutations -------------------------------------------------------------


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u∘v)(k) = u(v(k))."""
    return tuple(u[v[k] - 1] for k in range(len(v)))


def simple(i: int, n: int) -> Permutation:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def from_generators(gens: Sequence[int], n: int) -> Permutation:
    w = tuple(range(1, n + 1))
    for g in gens:
        w = compose(w, simple(g, n))
    return w


def inversions(w: Sequence[int]) -> int:
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


@lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Deterministic reduced expression (bubble the largest misplaced value right)."""
    w = tuple(w)
    if not is_permutation(w):
        raise ValueError(f"{w} is not a permutation")
    cur = list(w)
    steps = []
    while True:
        v = next((v for v in range(len(cur), 0, -1) if cur[v - 1] != v), None)
        if v is None:
            break
        p = cur.index(v)
        cur[p], cur[p + 1] = cur[p + 1], cur[p]
        steps.append(p + 1)
    return tuple(reversed(steps))


@lru_cache(maxsize=None)
def all_reduced_words(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """Every reduced expression of ``w`` (via right descents)."""
    w = tuple(w)
    if all(w[k] == k + 1 for k in range(len(w))):
        return ((),)
    out = []
    for k in range(1, len(w)):
        if w[k - 1] > w[k]:
            shorter = compose(w, simple(k, len(w)))
            out.extend(r + (k,) for r in all_reduced_words(shorter))
    return tuple(sorted(set(out)))


def chi_perm(i: int, j: int) -> Permutation:
    """Block transposition in S_{i+j}: first i values to j+1..j+i, last j to 1..j."""
    if i < 0 or j < 0:
        raise ValueError("block sizes must be non-negative")
    if i == 0 or j == 0:
        return tuple(range(1, i + j + 1))
    return tuple(j + k for k in range(1, i + 1)) + tuple(range(1, j + 1))


# --- operations on tensor elements -------------------------------------------


def _homogeneous_degree(x: TensorElement) -> int | None:
    ds = x.degrees()
    if len(ds) > 1:
        raise DegreeMismatch(f"element is not homogeneous (degrees {ds})")
    return ds[0] if ds else None


def check_ybe(sp: BraidedSpace) -> Report:
    """σ1σ2σ1 = σ2σ1σ2 on all d³ degree-3 basis words."""
    car = sp.carrier()
    triples = [tuple(w) for w in words(sp.dim, 3, 3)]
    rep = _check_ybe_carrier(car, triples, caps={"degree": 3}, name=f"ybe[{sp.label}]")
    if rep.witness is not None:
        rep.witness.inputs = ["⊗".join(rep.witness.inputs)]
    return rep


def check_braid_lifts(sp: BraidedSpace, sizes: Sequence[int] = (3, 4)) -> Report:
    """Every reduced word of every w in S_n gives the same operator on degree-n basis words."""
    checked = 0
    fmt = lambda raw: format_terms(raw, lambda w: format_word(w, sp.names))
    for n in sizes:
        ws = [tuple(w) for w in words(sp.dim, n, n)]
        for perm in itertools.permutations(range(1, n + 1)):
            reds = all_reduced_words(perm)
            for x in ws:
                ref = sp.lift_raw(reds[0], {x: 1})
                for other in reds[1:]:
                    checked += 1
                    got = sp.lift_raw(other, {x: 1})
                    if got != ref:
                        wit = Witness(
                            [format_word(x, sp.names)], fmt(ref), fmt(got), fmt(lc_sub(ref, got)),
                            f"T via {reds[0]} = T via {other} for w = {perm}",
                        )
                        return Report(f"braid-lifts[{sp.label}]", "fail", witness=wit, checked=checked, caps={"degree": max(sizes)})
    return Report(f"braid-lifts[{sp.label}]", "pass", checked=checked, caps={"degree": max(sizes)})


def apply_sigma_i(sp: BraidedSpace, n: int, i: int, x: TensorElement) -> TensorElement:
    if not 1 <= i <= n - 1:
        raise PositionOutOfRange(f"σ_{i} undefined on degree {n}")
    d = _homogeneous_degree(x)
    if d is not None and d != n:
        raise DegreeMismatch(f"expected degree {n}, got {d}")
    return TensorElement.from_raw(x.dim, lc_apply(x.raw, lambda w: sp.word_sigma(w, i)), x.bound)


def braid_lift(sp: BraidedSpace, w: Permutation, x: TensorElement, word: Sequence[int] | None = None) -> TensorElement:
    """T^σ_w(x) using the deterministic reduced word (or a supplied one)."""
    w = tuple(w)
    d = _homogeneous_degree(x)
    if d is not None and d != len(w):
        raise DegreeMismatch(f"permutation of size {len(w)} applied to degree {d}")
    gens = reduced_word(w) if word is None else tuple(word)
    if word is not None and from_generators(gens, len(w)) != w:
        raise ValueError(f"{gens} is not an expression of {w}")
    return TensorElement.from_raw(x.dim, sp.lift_raw(gens, x.raw), x.bound)


def apply_beta(sp: BraidedSpace, i: int, j: int, x: TensorElement) -> TensorElement:
    d = _homogeneous_degree(x)
    if d is not None and d != i + j:
        raise DegreeMismatch(f"β_{{{i},{j}}} applied to degree {d}")
    return TensorElement.from_raw(x.dim, lc_apply(x.raw, lambda w: sp.beta_word(i, w)), x.bound)


def apply_sigma_inverse(sp: BraidedSpace, x: TensorElement) -> TensorElement:
    if _homogeneous_degree(x) not in (None, 2):
        raise DegreeMismatch("σ⁻¹ acts on degree 2")
    return TensorElement.from_raw(x.dim, lc_apply(x.raw, lambda w: sp.word_sigma_inverse(w, 1)), x.bound)
