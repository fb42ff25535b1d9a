"""Registry of linear-complexity methods and the per-pair cross-check."""
import logging
from typing import Callable, Iterable, Optional

from gf2.field import build_field, primitive_nth_root
from lincomp.closed_form import lc_closed_form
from lincomp.complexity import berlekamp_massey, linear_complexity_gcd
from lincomp.sequence import generate
from lincomp.smatrix import SMatrix, build_smatrix, lc_from_smatrix
from models.cyclotomy_schema import CyclotomyContext
from models.report_schema import MethodName, PairReport
from ntheory.cyclotomy import build_context
from ntheory.residue_arith import mult_order
from utils.errors import CycloError, DegreeOutOfRange
from utils.settings import CYCLO_SMATRIX_MAX_DEGREE

logger = logging.getLogger("Methods")


def smatrix_for(ctx: CyclotomyContext, max_degree: int = CYCLO_SMATRIX_MAX_DEGREE) -> SMatrix:
    m = mult_order(2, ctx.n)
    if m > max_degree:
        raise DegreeOutOfRange(f"GF(2^{m}) exceeds the S-matrix degree limit {max_degree}")
    spec = build_field(m)
    return build_smatrix(ctx, spec, primitive_nth_root(spec, ctx.n))


def lc_by_gcd(ctx: CyclotomyContext, max_degree: int) -> int:
    return linear_complexity_gcd(generate(ctx))


def lc_by_bm(ctx: CyclotomyContext, max_degree: int) -> int:
    return berlekamp_massey(generate(ctx))[0]


def lc_by_smatrix(ctx: CyclotomyContext, max_degree: int) -> int:
    return lc_from_smatrix(smatrix_for(ctx, max_degree))


def lc_by_closed_form(ctx: CyclotomyContext, max_degree: int) -> int:
    return lc_closed_form(ctx.p, ctx.q)


ALL_METHODS: dict[MethodName, Callable[[CyclotomyContext, int], int]] = {
    MethodName.GCD: lc_by_gcd,
    MethodName.BM: lc_by_bm,
    MethodName.SMATRIX: lc_by_smatrix,
    MethodName.CLOSED: lc_by_closed_form,
}


def linear_complexity(
    ctx: CyclotomyContext,
    method: MethodName = MethodName.GCD,
    max_degree: int = CYCLO_SMATRIX_MAX_DEGREE,
) -> int:
    value = ALL_METHODS[MethodName(method)](ctx, max_degree)
    logger.info(f"L({ctx.p},{ctx.q}) = {value} by {MethodName(method).value}")
    return value


def cross_check_pair(
    p: int,
    q: int,
    methods: Iterable[MethodName],
    g: Optional[int] = None,
    max_degree: int = CYCLO_SMATRIX_MAX_DEGREE,
) -> PairReport:
    """Every requested method on (p, q) and (q, p) with the same g; all must agree."""
    forward_ctx = build_context(p, q, g)
    backward_ctx = build_context(q, p, forward_ctx.g)
    report = PairReport(p=p, q=q, g=forward_ctx.g)
    problems = []

    for method in methods:
        name = MethodName(method).value
        for ctx, bucket in ((forward_ctx, report.forward), (backward_ctx, report.backward)):
            try:
                bucket[name] = linear_complexity(ctx, method, max_degree)
            except DegreeOutOfRange:
                bucket[name] = None
                if name not in report.skipped:
                    report.skipped.append(name)
            except CycloError as exc:
                bucket[name] = None
                problems.append(f"{name}({ctx.p},{ctx.q}): {exc}")

    for label, bucket, (a, b) in (("L(p,q)", report.forward, (p, q)), ("L(q,p)", report.backward, (q, p))):
        values = {v for v in bucket.values() if v is not None}
        if len(values) > 1:
            problems.append(f"{label} disagrees: {bucket}")
        if any(2 * v < a * b - 1 for v in values):
            problems.append(f"{label} below (pq-1)/2: {bucket}")

    report.passed = not problems
    report.detail = "; ".join(problems)
    return report
