"""Named fixture structures (d = 2 unless noted).

Letters are 0-based internally and print as e1, e2, ...
"""

from __future__ import annotations

from .braided_algebra import BraidedAlgebraDef
from .braided_space import BraidedSpace
from .scalar import q


def flip(dim: int = 2, label: str = "FLIP2") -> BraidedSpace:
    return BraidedSpace(dim, {(i, j): {(j, i): 1} for i in range(dim) for j in range(dim)}, label=label)


def FLIP2() -> BraidedSpace:
    return flip(2)


def HECKE2(corrupt: bool = False) -> BraidedSpace:
    """σ(e1⊗e1)=e1⊗e1, σ(e1⊗e2)=q e2⊗e1, σ(e2⊗e1)=q e1⊗e2+(1-q²) e2⊗e1, σ(e2⊗e2)=e2⊗e2.

    ``corrupt`` replaces 1-q² by 1, which breaks the Yang-Baxter equation.
    """
    sigma = {
        (0, 0): {(0, 0): 1},
        (0, 1): {(1, 0): q},
        (1, 0): {(0, 1): q, (1, 0): 1 if corrupt else 1 - q**2},
        (1, 1): {(1, 1): 1},
    }
    if corrupt:
        return BraidedSpace(2, sigma, label="HECKE2-corrupt", defer_checks=True)
    return BraidedSpace(2, sigma, label="HECKE2")


def QFLIP2() -> BraidedSpace:
    return BraidedSpace(2, {(i, j): {(j, i): q} for i in range(2) for j in range(2)}, label="QFLIP2")


def SIGNFLIP(dim: int = 2) -> BraidedSpace:
    return BraidedSpace(dim, {(i, j): {(j, i): -1} for i in range(dim) for j in range(dim)}, label="SIGNFLIP")


def NULL2(space: BraidedSpace | None = None) -> BraidedAlgebraDef:
    """Zero product on a braided space (HECKE2 by default)."""
    sp = HECKE2() if space is None else space
    return BraidedAlgebraDef(sp, {}, label=f"NULL2+{sp.label}")


IDEM2_PRODUCT = {(0, 0): {0: 1}}


def IDEM2(space: BraidedSpace | None = None, defer_checks: bool = False) -> BraidedAlgebraDef:
    """m(e1⊗e1) = e1, every other product zero (FLIP2 by default)."""
    sp = FLIP2() if space is None else space
    return BraidedAlgebraDef(sp, IDEM2_PRODUCT, label=f"IDEM2+{sp.label}", defer_checks=defer_checks)


def DUAL_NUMBERS() -> BraidedAlgebraDef:
    """K[e]/(e²) on the basis {1, e} with the flip; unit is index 0."""
    sp = BraidedSpace(2, {(i, j): {(j, i): 1} for i in range(2) for j in range(2)}, names=["1", "e"], label="FLIP2")
    return BraidedAlgebraDef(sp, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}, unit=0, label="K[e]/e²")


def NONASSOC2() -> BraidedAlgebraDef:
    """A commutative but non-associative product on FLIP2 (negative control)."""
    return BraidedAlgebraDef(FLIP2(), {(0, 0): {1: 1}, (0, 1): {0: 1}, (1, 0): {0: 1}}, label="NONASSOC2", defer_checks=True)


def SPACES() -> dict[str, BraidedSpace]:
    return {"FLIP2": FLIP2(), "HECKE2": HECKE2(), "QFLIP2": QFLIP2(), "SIGNFLIP": SIGNFLIP()}


# --- Hopf algebras and Yetter-Drinfeld modules ---------------------------------------


def Z2() -> "HopfAlgebraDef":
    from .yd import group_algebra

    return group_algebra(2, label="K[Z/2]")


def Z2_YD(mixed: bool = False) -> "YDModuleDef":
    """V = span{v1, v2} over K[Z/2].

    Default: both vectors in degree g with g·v = −v, so the natural braiding is
    SIGNFLIP.  ``mixed``: v1 in degree g with g·v1 = −v1, v2 in degree 1 fixed by g.
    """
    from .yd import YDModuleDef

    H = Z2()
    if mixed:
        action = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {0: -1}, (1, 1): {1: 1}}
        coaction = {0: {(1, 0): 1}, 1: {(0, 1): 1}}
        return YDModuleDef(H, 2, action, coaction, label="V[Z/2, mixed]")
    action = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {0: -1}, (1, 1): {1: -1}}
    coaction = {0: {(1, 0): 1}, 1: {(1, 1): 1}}
    return YDModuleDef(H, 2, action, coaction, label="V[Z/2]")


def Z2_YD_BROKEN() -> "YDModuleDef":
    """g swaps v1 and v2 although they sit in different degrees (fails YD compatibility)."""
    from .yd import YDModuleDef

    action = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}}
    coaction = {0: {(1, 0): 1}, 1: {(0, 1): 1}}
    return YDModuleDef(Z2(), 2, action, coaction, label="V[Z/2, broken]", defer_checks=True)


def TRIVIAL_YD(dim: int = 2) -> "YDModuleDef":
    from .yd import YDModuleDef, trivial_hopf

    H = trivial_hopf()
    return YDModuleDef(H, dim, {(0, v): {v: 1} for v in range(dim)}, {v: {(0, v): 1} for v in range(dim)}, label=f"V{dim}[K]")
