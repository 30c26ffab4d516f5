"""Reader for the keyed-table definition format.

A file is a sequence of ``[section]`` blocks.  Key sections hold ``key = value``
lines, row sections hold whitespace-separated 1-based indices followed by a
scalar literal (the literal may contain spaces).  ``#`` starts a comment.

    [space]       dim, names, label, scalar (rational | laurent-q)
    [braiding]    i j k l c      σ(e_i⊗e_j) ∋ c·e_k⊗e_l
    [product]     i j k c        m(e_i⊗e_j) ∋ c·e_k
    [unit]        index = k
    [qmb]         p q i1 … i(p+q) k c     M_pq(e_i1…⊗…e_i(p+q)) ∋ c·e_k
    [hopf]        dim, names, label, group = n (shortcut for K[Z/n])
    [hopf.product] i j k c   [hopf.unit] k c   [hopf.coproduct] i j k c
    [hopf.counit] i c        [hopf.antipode] i j c
    [yd]          dim, names, label
    [yd.action]   h v w c    h·v ∋ c·w
    [yd.coaction] v h w c    ρ(v) ∋ c·h⊗w
    [options]     defer_checks = true | false, variant = drop-middle, label

With a ``[yd]`` section the braiding is the natural one and ``[braiding]``
must be absent.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .braided_algebra import BraidedAlgebraDef
from .braided_space import BraidedSpace
from .errors import ParseError, ValidationError
from .qmb import QMBDef
from .scalar import Scalar, parse_scalar
from .yd import HopfAlgebraDef, YDModuleDef, group_algebra, natural_braiding

KEY_SECTIONS = {"space", "unit", "hopf", "yd", "options"}
ROW_SECTIONS = {
    "braiding": 4,
    "product": 3,
    "qmb": None,
    "hopf.product": 3,
    "hopf.unit": 1,
    "hopf.coproduct": 3,
    "hopf.counit": 1,
    "hopf.antipode": 2,
    "yd.action": 3,
    "yd.coaction": 3,
}
VARIANTS = ("", "drop-middle")


@dataclass
class Definitions:
    """Everything a file defines; ``primary`` is the richest object."""

    source: str
    space: BraidedSpace | None = None
    algebra: BraidedAlgebraDef | None = None
    qmb: QMBDef | None = None
    hopf: HopfAlgebraDef | None = None
    yd: YDModuleDef | None = None
    scalar_mode: str = "laurent-q"
    defer_checks: bool = False
    variant: str = ""
    label: str = ""
    notes: list = field(default_factory=list)

    @property
    def primary(self):
        for obj in (self.yd, self.qmb, self.algebra, self.space, self.hopf):
            if obj is not None:
                return obj
        raise ValidationError(f"{self.source}: nothing defined")


@dataclass
class _Section:
    name: str
    line: int
    keys: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)


def _split_sections(text: str, source: str) -> dict[str, _Section]:
    sections: dict[str, _Section] = {}
    cur = None
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError("unterminated section header", n)
            name = line[1:-1].strip().lower()
            if name not in KEY_SECTIONS and name not in ROW_SECTIONS:
                raise ParseError(f"unknown section [{name}]", n)
            if name in sections:
                raise ParseError(f"section [{name}] appears twice", n)
            cur = sections[name] = _Section(name, n)
            continue
        if cur is None:
            raise ParseError("content before the first section", n)
        if cur.name in KEY_SECTIONS:
            if "=" not in line:
                raise ParseError(f"expected 'key = value' in [{cur.name}]", n)
            k, v = (s.strip() for s in line.split("=", 1))
            if not k:
                raise ParseError("empty key", n)
            if k in cur.keys:
                raise ParseError(f"duplicate key in [{cur.name}]", n, k)
            cur.keys[k] = (v, n)
        else:
            cur.rows.append((line.split(), n))
    return sections


def _int(text: str, line: int, fld: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", line, fld) from None


def _scalar(tokens: list[str], line: int, fld: str = "coeff") -> Scalar:
    if not tokens:
        raise ParseError("missing coefficient", line, fld)
    try:
        return parse_scalar(" ".join(tokens))
    except ParseError as exc:
        raise ParseError(str(exc), line, fld) from None


def _index(text: str, dim: int, line: int, fld: str) -> int:
    i = _int(text, line, fld)
    if not 1 <= i <= dim:
        raise ParseError(f"index {i} outside 1..{dim}", line, fld)
    return i - 1


def _dim(sec: _Section) -> int:
    if "dim" not in sec.keys:
        raise ParseError(f"[{sec.name}] needs dim", sec.line, "dim")
    v, n = sec.keys["dim"]
    d = _int(v, n, "dim")
    if d < 1:
        raise ParseError("dim must be at least 1", n, "dim")
    return d


def _names(sec: _Section, dim: int, default: list[str]) -> list[str]:
    if "names" not in sec.keys:
        return default
    v, n = sec.keys["names"]
    names = v.split()
    if len(names) != dim:
        raise ParseError(f"{len(names)} names for dim {dim}", n, "names")
    if len(set(names)) != dim:
        raise ParseError("names must be distinct", n, "names")
    return names


def _bool(v: str, n: int, fld: str) -> bool:
    if v.lower() in ("1", "true", "yes"):
        return True
    if v.lower() in ("0", "false", "no"):
        return False
    raise ParseError(f"expected true or false, got {v!r}", n, fld)


def _accumulate(table: dict, key, sub, c: Scalar):
    entry = table.setdefault(key, {})
    entry[sub] = entry.get(sub, Scalar(0)) + c


def _rows(sec: _Section | None, nidx: int, dims: list[int]):
    if sec is None:
        return
    for toks, n in sec.rows:
        if len(toks) < nidx + 1:
            raise ParseError(f"[{sec.name}] rows need {nidx} indices and a coefficient", n)
        idx = [_index(toks[k], dims[k], n, f"column {k + 1}") for k in range(nidx)]
        yield idx, _scalar(toks[nidx:], n), n


def _check_keys(sec: _Section | None, allowed: set):
    if sec is None:
        return
    for k, (_, n) in sec.keys.items():
        if k not in allowed:
            raise ParseError(f"unknown key in [{sec.name}]", n, k)


def parse_text(text: str, source: str = "<string>", defer_checks: bool | None = None) -> Definitions:
    secs = _split_sections(text, source)
    g = secs.get
    _check_keys(g("space"), {"dim", "names", "label", "scalar"})
    _check_keys(g("unit"), {"index"})
    _check_keys(g("hopf"), {"dim", "names", "label", "group"})
    _check_keys(g("yd"), {"dim", "names", "label"})
    _check_keys(g("options"), {"defer_checks", "variant", "label"})
    out = Definitions(source)
    opts = g("options")
    if opts is not None:
        if "defer_checks" in opts.keys:
            out.defer_checks = _bool(*opts.keys["defer_checks"], "defer_checks")
        if "variant" in opts.keys:
            v, n = opts.keys["variant"]
            if v not in VARIANTS:
                raise ParseError(f"unknown variant {v!r}", n, "variant")
            out.variant = v
        if "label" in opts.keys:
            out.label = opts.keys["label"][0]
    if defer_checks is not None:
        out.defer_checks = defer_checks
    defer = out.defer_checks

    # Hopf algebra and YD module
    if g("hopf") is not None:
        out.hopf = _parse_hopf(secs, defer)
    elif any(s.startswith("hopf.") for s in secs):
        raise ParseError("[hopf.*] tables need a [hopf] section", min(s.line for k, s in secs.items() if k.startswith("hopf.")))
    if g("yd") is not None:
        if out.hopf is None:
            raise ParseError("[yd] needs a [hopf] section", g("yd").line)
        if g("braiding") is not None:
            raise ParseError("[braiding] is derived from [yd]; remove one of them", g("braiding").line)
        out.yd = _parse_yd(secs, out.hopf, defer)
    elif any(s.startswith("yd.") for s in secs):
        raise ParseError("[yd.*] tables need a [yd] section", min(s.line for k, s in secs.items() if k.startswith("yd.")))

    # braided space
    sp_sec = g("space")
    if sp_sec is not None:
        if out.yd is not None:
            raise ParseError("[space] conflicts with [yd]", sp_sec.line)
        dim = _dim(sp_sec)
        names = _names(sp_sec, dim, [f"e{i + 1}" for i in range(dim)])
        label = sp_sec.keys.get("label", (os.path.splitext(os.path.basename(source))[0], 0))[0]
        if "scalar" in sp_sec.keys:
            v, n = sp_sec.keys["scalar"]
            if v not in ("rational", "laurent-q"):
                raise ParseError(f"scalar must be rational or laurent-q, got {v!r}", n, "scalar")
            out.scalar_mode = v
        if g("braiding") is None:
            raise ParseError("[space] needs a [braiding] table", sp_sec.line)
        sigma: dict = {}
        for (i, j, k, l), c, n in _rows(g("braiding"), 4, [dim] * 4):
            if out.scalar_mode == "rational" and not c.is_constant():
                raise ParseError("q is not allowed with scalar = rational", n, "coeff")
            _accumulate(sigma, (i, j), (k, l), c)
        out.space = BraidedSpace(dim, sigma, names=names, label=label, defer_checks=defer)
    elif out.yd is not None:
        out.space = natural_braiding(out.yd, defer)
    elif g("braiding") is not None:
        raise ParseError("[braiding] needs a [space] section", g("braiding").line)

    # algebra
    if g("product") is not None or g("unit") is not None:
        if out.space is None:
            raise ParseError("[product] needs a braided space", (g("product") or g("unit")).line)
        d = out.space.dim
        prod: dict = {}
        for (i, j, k), c, _ in _rows(g("product"), 3, [d] * 3):
            _accumulate(prod, (i, j), k, c)
        unit = None
        if g("unit") is not None:
            if "index" not in g("unit").keys:
                raise ParseError("[unit] needs index", g("unit").line, "index")
            v, n = g("unit").keys["index"]
            unit = _index(v, d, n, "index")
        label = out.label or (f"{out.space.label}+m" if prod else f"{out.space.label}-m=0")
        out.algebra = BraidedAlgebraDef(out.space, prod, unit=unit, label=label, defer_checks=defer)

    # quantum multi-brace
    if g("qmb") is not None:
        if out.space is None:
            raise ParseError("[qmb] needs a braided space", g("qmb").line)
        d = out.space.dim
        M: dict = {}
        for toks, n in g("qmb").rows:
            if len(toks) < 3:
                raise ParseError("[qmb] rows are 'p q i1 … k coeff'", n)
            p, qq = _int(toks[0], n, "p"), _int(toks[1], n, "q")
            if p < 1 or qq < 1:
                raise ParseError("M_pq needs p, q ≥ 1", n, "p" if p < 1 else "q")
            need = p + qq + 1
            if len(toks) < 2 + need + 1:
                raise ParseError(f"M_{p}{qq} rows need {need} indices and a coefficient", n)
            idx = [_index(t, d, n, f"index {k + 1}") for k, t in enumerate(toks[2:2 + need])]
            c = _scalar(toks[2 + need:], n)
            _accumulate(M.setdefault((p, qq), {}), (tuple(idx[:p]), tuple(idx[p:p + qq])), idx[-1], c)
        out.qmb = QMBDef(out.space, M, label=f"QMB[{out.label or out.space.label}]", defer_checks=defer)
    if not out.label:
        out.label = out.primary.label
    return out


def _parse_hopf(secs, defer) -> HopfAlgebraDef:
    sec = secs["hopf"]
    label = sec.keys.get("label", (None, 0))[0]
    if "group" in sec.keys:
        v, n = sec.keys["group"]
        order = _int(v, n, "group")
        if order < 1:
            raise ParseError("group order must be positive", n, "group")
        if any(k.startswith("hopf.") for k in secs) or "dim" in sec.keys:
            raise ParseError("group = n cannot be combined with explicit Hopf tables", n, "group")
        return group_algebra(order, label=label)
    d = _dim(sec)
    names = _names(sec, d, [f"h{i + 1}" for i in range(d)])
    g = secs.get
    mult: dict = {}
    for (i, j, k), c, _ in _rows(g("hopf.product"), 3, [d] * 3):
        _accumulate(mult, (i, j), k, c)
    unit: dict = {}
    for (k,), c, _ in _rows(g("hopf.unit"), 1, [d]):
        unit[k] = unit.get(k, Scalar(0)) + c
    comult: dict = {}
    for (i, j, k), c, _ in _rows(g("hopf.coproduct"), 3, [d] * 3):
        _accumulate(comult, i, (j, k), c)
    counit: dict = {}
    for (i,), c, _ in _rows(g("hopf.counit"), 1, [d]):
        counit[i] = counit.get(i, Scalar(0)) + c
    anti: dict = {}
    for (i, j), c, _ in _rows(g("hopf.antipode"), 2, [d] * 2):
        _accumulate(anti, i, j, c)
    return HopfAlgebraDef(d, mult, unit, comult, counit, anti, names=names, label=label or "H", defer_checks=defer)


def _parse_yd(secs, H: HopfAlgebraDef, defer) -> YDModuleDef:
    sec = secs["yd"]
    d = _dim(sec)
    names = _names(sec, d, [f"v{i + 1}" for i in range(d)])
    label = sec.keys.get("label", ("V", 0))[0]
    g = secs.get
    action: dict = {}
    for (h, v, w), c, _ in _rows(g("yd.action"), 3, [H.dim, d, d]):
        _accumulate(action, (h, v), w, c)
    coaction: dict = {}
    for (v, h, w), c, _ in _rows(g("yd.coaction"), 3, [d, H.dim, d]):
        _accumulate(coaction, v, (h, w), c)
    return YDModuleDef(H, d, action, coaction, names=names, label=label, defer_checks=defer)


def load_definitions(path: str, defer_checks: bool | None = None) -> Definitions:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_text(text, source=path, defer_checks=defer_checks)


def parse_definition(path: str, defer_checks: bool | None = None):
    """The richest object defined by the file (YD module, QMB, algebra, space or Hopf algebra)."""
    return load_definitions(path, defer_checks).primary
