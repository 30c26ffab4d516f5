"""Check suites over parsed definitions, with order-stable report assembly."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .braided_algebra import BraidedAlgebraDef, check_braided_algebra, check_unital, unitalize
from .braided_space import check_braid_lifts, check_ybe
from .errors import QshError
from .fileformat import Definitions
from .qmb import QMBDef, check_star_braided_algebra, check_qmb_axioms, check_star_vs_qsh, check_top_component
from .quasi_shuffle import QuasiShuffle, check_filtration, check_qsh_associativity, get_engine
from .report import Report
from .rota_baxter import RBAlgebra, check_R_braided_rb, check_projection_pair, check_rota_baxter, operator_P, operator_P1, operator_P2
from .scalar import Scalar
from .tensor import default_bound
from .tridendriform import check_rb_tri_consistency, check_tri_suite
from .yd import Bosonization, check_hopf_axioms, check_bosonization_rb, check_yd_algebra, check_yd_module, natural_braiding

SUITES = ("ybe", "braided-algebra", "qsh-assoc", "filtration", "rota-baxter", "tridendriform", "braided-rb", "qmb", "yd", "bosonization")

# default caps: word degree, except rota-baxter / braided-rb where it is the tail degree of a pair
DEFAULT_CAPS = {
    "qsh-assoc": 5,
    "filtration": 5,
    "rota-baxter": 3,
    "tridendriform": 4,
    "braided-rb": 2,
    "qmb": 4,
    "yd": 4,
    "bosonization": 3,
}


class UsageError(QshError):
    pass


class Inapplicable(UsageError):
    pass


@dataclass
class SessionConfig:
    degree_bound: int = field(default_factory=default_bound)
    scalar_mode: str = "laurent-q"
    checks: tuple = ()
    parallel: bool = False
    output: str = "text"
    weight: Scalar | None = None
    degree_cap: int | None = None
    mode: str = "strong"

    def __post_init__(self):
        if self.degree_bound < 1:
            raise UsageError("the degree bound must be at least 1")
        if self.mode not in ("weak", "strong"):
            raise UsageError(f"mode must be weak or strong, not {self.mode!r}")
        if self.output not in ("text", "json"):
            raise UsageError(f"output must be text or json, not {self.output!r}")
        if self.degree_cap is not None and not 1 <= self.degree_cap <= self.degree_bound:
            raise UsageError(f"--degree-cap must lie in 1..{self.degree_bound}")

    def cap(self, suite: str) -> int:
        if self.degree_cap is not None:
            return self.degree_cap
        return min(DEFAULT_CAPS[suite], self.degree_bound)

    def lam(self, default=1) -> Scalar:
        return Scalar(default) if self.weight is None else self.weight


def expand_selection(selection) -> tuple:
    names = []
    for s in selection:
        for part in str(s).split(","):
            part = part.strip()
            if not part:
                continue
            if part == "all":
                names.extend(SUITES)
            elif part in SUITES:
                names.append(part)
            else:
                raise UsageError(f"unknown suite {part!r}; choose from {', '.join(SUITES + ('all',))}")
    if not names:
        raise UsageError("no check selected")
    return tuple(dict.fromkeys(names))


# --- definitions to objects ---------------------------------------------------------------


def _algebra(defs: Definitions) -> BraidedAlgebraDef:
    if defs.algebra is not None:
        return defs.algebra
    if defs.space is None:
        raise Inapplicable("needs a braided space")
    # a bare space is read as the zero product on it
    return BraidedAlgebraDef(defs.space, {}, label=f"{defs.space.label}-m=0", defer_checks=True)


def _qsh(defs: Definitions, alg, weight):
    if _dropped(defs):
        return QuasiShuffle(alg, weight, drop_middle=True)
    return get_engine(alg, weight)


def _dropped(defs: Definitions) -> bool:
    return defs.variant == "drop-middle"


def _R(defs: Definitions, alg, weight) -> RBAlgebra:
    return RBAlgebra(alg, weight, drop_middle=_dropped(defs))


def _is_m11_of(qmb: QMBDef, alg: BraidedAlgebraDef) -> bool:
    t = qmb.table()
    if any(pq != (1, 1) for pq in t):
        return False
    d = alg.dim
    return all(qmb.M((i,), (j,)) == {(k,): c for k, c in alg.mul_raw(i, j).items()} for i in range(d) for j in range(d))


def _qmbs(defs: Definitions) -> list[QMBDef]:
    if defs.space is None:
        raise Inapplicable("needs a braided space")
    if defs.qmb is not None:
        return [defs.qmb]
    out = [QMBDef.trivial(defs.space)]
    if defs.algebra is not None and not defs.algebra.is_zero_product():
        out.append(QMBDef.from_algebra(defs.algebra, defer_checks=defs.defer_checks))
    return out


def _yd(defs: Definitions):
    if defs.yd is None:
        raise Inapplicable("needs [hopf] and [yd] sections")
    return defs.yd


# --- suites -------------------------------------------------------------------------------


def suite_ybe(defs, cfg):
    if defs.space is None:
        raise Inapplicable("needs a braided space")
    return [lambda: check_ybe(defs.space), lambda: check_braid_lifts(defs.space, (3, 4))]


def suite_braided_algebra(defs, cfg):
    if defs.algebra is None:
        raise Inapplicable("needs a [product] section")
    alg = defs.algebra
    jobs = [lambda: check_braided_algebra(alg)]
    if alg.unit is not None:
        jobs.append(lambda: check_unital(alg))
    return jobs


def suite_qsh_assoc(defs, cfg):
    alg = _algebra(defs)
    lam, cap = cfg.lam(), cfg.cap("qsh-assoc")
    return [lambda: check_qsh_associativity(alg, lam, cap, product=_qsh(defs, alg, lam))]


def suite_filtration(defs, cfg):
    alg = _algebra(defs)
    lam, cap = cfg.lam(), cfg.cap("filtration")
    return [lambda: check_filtration(alg, lam, cap, product=_qsh(defs, alg, lam))]


def suite_rota_baxter(defs, cfg):
    alg = _algebra(defs)
    lam, cap = cfg.lam(), cfg.cap("rota-baxter")

    def p_identity():
        R = _R(defs, unitalize(alg), lam)
        return check_rota_baxter(R, operator_P(R), cap)

    def projections():
        R = _R(defs, alg, lam)
        return check_projection_pair(R, operator_P1(R), operator_P2(R), cap)

    return [p_identity, projections]


def suite_tridendriform(defs, cfg):
    alg = _algebra(defs)
    cap = cfg.cap("tridendriform")
    return [
        lambda: check_tri_suite(alg, cap, drop_middle=_dropped(defs)),
        lambda: check_rb_tri_consistency(_R(defs, unitalize(alg), 1), cap),
    ]


def suite_braided_rb(defs, cfg):
    alg = _algebra(defs)
    lam, cap, mode = cfg.lam(), cfg.cap("braided-rb"), cfg.mode

    def with_P():
        R = _R(defs, unitalize(alg), lam)
        return check_R_braided_rb(R, operator_P(R), mode, cap)

    def with_proj(make):
        def run():
            R = _R(defs, alg, lam)
            return check_R_braided_rb(R, make(R), mode, cap)

        return run

    return [with_P, with_proj(operator_P1), with_proj(operator_P2)]


def suite_qmb(defs, cfg):
    cap = cfg.cap("qmb")
    jobs = []
    for qmb in _qmbs(defs):
        jobs.append(lambda m=qmb: check_qmb_axioms(m, cap))
        jobs.append(lambda m=qmb: check_star_braided_algebra(m, cap))
        jobs.append(lambda m=qmb: check_top_component(m, cap))
        if defs.algebra is not None and _is_m11_of(qmb, defs.algebra):
            jobs.append(lambda m=qmb: check_star_vs_qsh(m, defs.algebra, cap))
    return jobs


def suite_yd(defs, cfg):
    yd = _yd(defs)
    cap = cfg.cap("yd")
    qmb = defs.qmb if defs.qmb is not None else QMBDef.trivial(defs.space)
    return [
        lambda: check_hopf_axioms(yd.H),
        lambda: check_yd_module(yd),
        lambda: check_ybe(natural_braiding(yd)),
        lambda: check_yd_algebra(yd, qmb, cap),
    ]


def suite_bosonization(defs, cfg):
    yd = _yd(defs)
    cap = cfg.cap("bosonization")
    lam = cfg.lam(-1)
    return [lambda: check_bosonization_rb(Bosonization(yd, defs.qmb), cap, lam, cfg.mode)]


SUITE_FUNCS: dict[str, Callable] = {
    "ybe": suite_ybe,
    "braided-algebra": suite_braided_algebra,
    "qsh-assoc": suite_qsh_assoc,
    "filtration": suite_filtration,
    "rota-baxter": suite_rota_baxter,
    "tridendriform": suite_tridendriform,
    "braided-rb": suite_braided_rb,
    "qmb": suite_qmb,
    "yd": suite_yd,
    "bosonization": suite_bosonization,
}


def applicable(defs: Definitions, suite: str) -> bool:
    try:
        SUITE_FUNCS[suite](defs, SessionConfig())
    except Inapplicable:
        return False
    return True


def _run_job(suite: str, job: Callable) -> Report:
    t0 = time.perf_counter()
    try:
        rep = job()
    except QshError as exc:
        rep = Report(f"{suite}", "error", notes=[f"{type(exc).__name__}: {exc}"])
    rep.timing = round(time.perf_counter() - t0, 6)
    rep.details = {**rep.details, "suite": suite}
    return rep


def _mentions_all(selection) -> bool:
    return any(p.strip() == "all" for s in selection for p in str(s).split(","))


def run_suite(cfg: SessionConfig, defs: Definitions) -> list[Report]:
    """Run the selected suites; order follows the selection, then the job order within a suite.

    A suite named explicitly that does not apply to the file is a usage error;
    under ``all`` it is skipped.
    """
    selected = expand_selection(cfg.checks)
    explicit = not _mentions_all(cfg.checks)
    jobs: list[tuple[str, Callable]] = []
    for s in selected:
        try:
            jobs.extend((s, j) for j in SUITE_FUNCS[s](defs, cfg))
        except Inapplicable as exc:
            if explicit:
                raise Inapplicable(f"suite {s} does not apply to {defs.source}: {exc}") from None
    if not jobs:
        raise UsageError(f"no selected suite applies to {defs.source}")
    if cfg.parallel and len(jobs) > 1:
        with ThreadPoolExecutor() as pool:
            futures = [pool.submit(_run_job, s, j) for s, j in jobs]
            return [f.result() for f in futures]
    return [_run_job(s, j) for s, j in jobs]


def exit_status(reports: list[Report]) -> int:
    return 0 if all(r.passed for r in reports) else 1
