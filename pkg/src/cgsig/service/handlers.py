"""Transport-independent command handlers.

Each handler takes a validated request model and returns an
:class:`~cgsig.service.models.Envelope`; the FastAPI routes and the CLI both
dispatch through these, so the wire payload and the ``--json`` output are the
same object.
"""

from __future__ import annotations

from .. import checks
from ..angles import RationalAngle
from ..casson_gordon import cg_integer_surgery, cg_lens, cg_rational_surgery
from ..intlinalg import IntMatrix, cokernel_analysis, plumbing_matrix_Q, smith_normal_form
from ..knots import parse as parse_knot
from ..obstructions import (ObstructionReport, family_lower_bound, fib_family,
                            fusion_bound_minmax, fusion_bound_via_surgery,
                            generator_one_handle_bound, lens_surgery_parameter,
                            one_handle_obstruction_integer,
                            one_handle_obstruction_rational)
from ..signatures import lt_signature
from .models import (CgLensRequest, CgSurgeryRequest, Envelope, FamilyRequest,
                     FusionMinmaxRequest, FusionSurgeryRequest, H1Request,
                     ObstructRequest, ReproduceRequest, SigRequest,
                     encode_big_ints)


def _envelope(command, inputs, result, report: ObstructionReport | None = None):
    kwargs = {}
    if report is not None:
        kwargs["witnesses"] = [list(w) for w in report.witnesses]
        kwargs["skipped"] = [list(s) for s in report.skipped]
    return Envelope(command=command, inputs=encode_big_ints(inputs),
                    result=encode_big_ints(result), **kwargs)


def handle_sig(req: SigRequest) -> Envelope:
    knot = parse_knot(req.knot)
    theta = RationalAngle.parse(req.angle)
    sig = lt_signature(knot, theta)
    return _envelope("sig",
                     {"knot": req.knot, "angle": str(theta)},
                     {"value": sig.value, "at_jump": sig.at_jump})


def handle_cg_surgery(req: CgSurgeryRequest) -> Envelope:
    knot = parse_knot(req.knot)
    if req.q is None or req.q == 1:
        value = cg_integer_surgery(knot, req.m, req.a)
    else:
        value = cg_rational_surgery(knot, req.m, req.q, req.a)
    inputs = {"knot": req.knot, "m": req.m, "a": req.a}
    if req.q is not None:
        inputs["q"] = req.q
    return _envelope("cg surgery", inputs, {"value": value.value})


def handle_cg_lens(req: CgLensRequest) -> Envelope:
    value = cg_lens(req.p, req.q, req.order, req.a)
    return _envelope("cg lens",
                     {"p": req.p, "q": req.q, "order": req.order, "a": req.a},
                     {"value": value.value})


def handle_h1(req: H1Request) -> Envelope:
    if (req.matrix is None) == (req.plumbing is None):
        raise ValueError("provide exactly one of 'matrix' or 'plumbing'")
    if req.matrix is not None:
        mat = IntMatrix(req.matrix)
        inputs = {"matrix": req.matrix}
    else:
        mat = plumbing_matrix_Q(req.plumbing.a, req.plumbing.n)
        inputs = {"plumbing": {"a": req.plumbing.a, "n": req.plumbing.n}}
    snf = smith_normal_form(mat)
    info = cokernel_analysis(mat)
    result = {
        "invariant_factors": list(snf.invariant_factors),
        "is_cyclic": info.is_cyclic,
        "min_generators": info.min_generators,
        "order": info.order if info.order is not None else "infinite",
        "one_handle_bound": generator_one_handle_bound(mat),
    }
    return _envelope("h1", inputs, result)


def handle_obstruct(req: ObstructRequest) -> Envelope:
    knot = parse_knot(req.knot)
    if req.q is None or req.q == 1:
        report = one_handle_obstruction_integer(knot, req.m)
    else:
        report = one_handle_obstruction_rational(knot, req.m, req.q)
    inputs = {"knot": req.knot, "m": req.m}
    if req.q is not None:
        inputs["q"] = req.q
    return _envelope("obstruct one-handle", inputs,
                     {"verdict": report.verdict}, report=report)


def handle_fusion_minmax(req: FusionMinmaxRequest) -> Envelope:
    bound = fusion_bound_minmax(req.lens)
    conversions = [[p, lens_surgery_parameter(p, q)] for p, q in req.lens]
    return _envelope("fusion minmax",
                     {"lens": [list(s) for s in req.lens]},
                     {"bound": bound, "surgery_parameters": conversions})


def handle_fusion_surgery(req: FusionSurgeryRequest) -> Envelope:
    knot = parse_knot(req.knot)
    bound = fusion_bound_via_surgery(knot, req.m)
    report = one_handle_obstruction_integer(knot, req.m)
    return _envelope("fusion surgery",
                     {"knot": req.knot, "m": req.m},
                     {"bound": bound, "verdict": report.verdict}, report=report)


def handle_family(req: FamilyRequest) -> Envelope:
    fam = fib_family(req.v)
    bound, certificate = family_lower_bound(req.v, fam)
    result = {
        "bound": bound,
        "certificate": [c.value for c in certificate],
        "p": list(fam.p),
        "n_digits": [len(str(n)) for n in fam.n],
    }
    return _envelope("family", {"v": req.v}, result)


def handle_reproduce(req: ReproduceRequest) -> Envelope:
    rows = checks.reference_checks()
    return _envelope("reproduce-paper", {},
                     {"rows": rows, "all_ok": checks.all_ok(rows)})
