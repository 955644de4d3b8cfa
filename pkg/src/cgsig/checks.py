"""Built-in regression table: every published reference value the library
reproduces, run as one batch.  Each row is (claim, computed, expected, status)
with status "ok" or "FAIL"; the batch as a whole passes iff every row is ok.
"""

from __future__ import annotations

from fractions import Fraction

from .angles import RationalAngle
from .casson_gordon import cg_connected_sum, cg_integer_surgery, cg_lens
from .hermitian import hermitian_signature, seifert_matrix_torus
from .intlinalg import cokernel_analysis, plumbing_matrix_Q
from .knots import Torus, count_alexander_roots_in_arc, parse
from .obstructions import (character_extends, family_lower_bound, fib_family,
                           fusion_bound_minmax, fusion_bound_via_surgery,
                           one_handle_obstruction_integer)
from .signatures import lt_signature


def reference_checks() -> list:
    """Run the whole table; returns rows of {claim, computed, expected, status}."""
    rows = []

    def row(claim, computed, expected):
        rows.append({
            "claim": claim,
            "computed": computed,
            "expected": expected,
            "status": "ok" if computed == expected else "FAIL",
        })

    row("signature of T(4,25) at 1/10",
        lt_signature(parse("T(4,25)"), RationalAngle(1, 10)).value, -15)
    row("signature of T(25,169) at 1/65 equals 5-2*65",
        lt_signature(parse("T(25,169)"), RationalAngle(1, 65)).value, -125)
    row("surgery defect of S^3_100(T(4,25)) at a=1",
        cg_integer_surgery(parse("T(4,25)"), 10, 1).value, 2)
    row("one-handle sweep verdict for S^3_100(T(4,25))",
        one_handle_obstruction_integer(parse("T(4,25)"), 10).verdict,
        "obstructed")
    row("cable defect |sigma| for S^3_400(C(2,201;T(4,25))) at a=1",
        abs(cg_integer_surgery(parse("C(2,201;T(4,25))"), 20, 1)), 2)
    row("cable defect |sigma| for S^3_38025(C(3,12676;T(25,169))) at a=1",
        abs(cg_integer_surgery(parse("C(3,12676;T(25,169))"), 195, 1)), 2)
    row("lens value for L(4,3) = S^3_4(unknot), order-2 character",
        cg_lens(4, 1, 2, 1).value, 1)
    row("lens value for L(25,21) = S^3_{25/4}(unknot), order-5 character",
        cg_lens(25, 4, 5, 1).value, 1)
    row("additivity: the two lens summands total",
        cg_connected_sum([cg_lens(4, 1, 2, 1), cg_lens(25, 4, 5, 1)]).value, 2)
    row("Alexander roots of T(25,169) on (0, 1/65) = 65-1-2",
        count_alexander_roots_in_arc(Torus(25, 169), 0, Fraction(1, 65)), 62)
    row("Seifert-matrix oracle agrees at T(4,25), 1/10",
        hermitian_signature(seifert_matrix_torus(4, 25), RationalAngle(1, 10)),
        -15)
    row("plumbing cokernel a=2, n=[65] is cyclic",
        cokernel_analysis(plumbing_matrix_Q(2, [65])).is_cyclic, True)
    row("plumbing cokernel order equals (2*65)^2",
        cokernel_analysis(plumbing_matrix_Q(2, [65])).order, 16900)
    row("family indices for v=2", list(fib_family(2).p), [5, 209])
    bound, cert = family_lower_bound(1)
    row("family bound v=1 with certificate",
        (bound, [c.value for c in cert]), (1, [2]))
    row("fusion bound via surgery for T(25,169), m=65",
        fusion_bound_via_surgery(parse("T(25,169)"), 65), 2)
    row("fusion min-max bound for the single summand L(25,6)",
        fusion_bound_minmax([(25, 6)]), 0)
    row("order-5 characters extend over balls filled by order-100 cyclic",
        character_extends(100, 5), True)
    row("order-4 characters do not extend (4 does not divide 10)",
        character_extends(100, 4), False)
    return rows


def all_ok(rows) -> bool:
    return all(r["status"] == "ok" for r in rows)
