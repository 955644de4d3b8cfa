"""cgsig: exact signature invariants of knots and Dehn surgeries, with
lower bounds on handle numbers of rational homology balls and on the fusion
number of ribbon knots.

The core objects are exact rational angles on the unit circle
(:class:`~cgsig.angles.RationalAngle`), a small knot-expression language
(torus knots, cables, connected sums), an exact Levine-Tristram signature
evaluator with an independent Seifert-matrix oracle, Casson-Gordon-type
signature values of surgeries and lens spaces computed through chain-link
presentations, and the obstruction sweeps built on top of them.
"""

from .angles import RationalAngle
from .casson_gordon import (CgValue, ChainPresentation, IntegralityError,
                            InvalidCharacter, UnsupportedCharacter,
                            cg_connected_sum, cg_integer_surgery, cg_lens,
                            cg_rational_surgery, chain_colors)
from .hermitian import (CertificationError, hermitian_signature,
                        seifert_matrix_positive_braid, seifert_matrix_torus)
from .intlinalg import (CokernelInfo, IntMatrix, SnfResult, chain_determinant,
                        chain_linking_matrix, cokernel_analysis,
                        neg_continued_fraction, plumbing_matrix_Q,
                        smith_normal_form, symmetric_signature)
from .knots import (Cable, KnotExpr, ParseError, Sum, Torus, Unknot,
                    connected_sum, count_alexander_roots_in_arc,
                    is_alexander_root, parse, render)
from .obstructions import (FibFamily, ObstructionReport, character_extends,
                           family_lower_bound, fib_family, fibonacci,
                           fusion_bound_minmax, fusion_bound_via_surgery,
                           generator_one_handle_bound, odd_handle_lower_bound,
                           one_handle_obstruction_integer,
                           one_handle_obstruction_rational)
from .signatures import SignatureValue, count_lattice, floor_sum, lt_signature

__version__ = "0.1.0"

__all__ = [
    "RationalAngle",
    "CgValue", "ChainPresentation", "IntegralityError", "InvalidCharacter",
    "UnsupportedCharacter", "cg_connected_sum", "cg_integer_surgery",
    "cg_lens", "cg_rational_surgery", "chain_colors",
    "CertificationError", "hermitian_signature",
    "seifert_matrix_positive_braid", "seifert_matrix_torus",
    "CokernelInfo", "IntMatrix", "SnfResult", "chain_determinant",
    "chain_linking_matrix", "cokernel_analysis", "neg_continued_fraction",
    "plumbing_matrix_Q", "smith_normal_form", "symmetric_signature",
    "Cable", "KnotExpr", "ParseError", "Sum", "Torus", "Unknot",
    "connected_sum", "count_alexander_roots_in_arc", "is_alexander_root",
    "parse", "render",
    "FibFamily", "ObstructionReport", "character_extends",
    "family_lower_bound", "fib_family", "fibonacci", "fusion_bound_minmax",
    "fusion_bound_via_surgery", "generator_one_handle_bound",
    "odd_handle_lower_bound", "one_handle_obstruction_integer",
    "one_handle_obstruction_rational",
    "SignatureValue", "count_lattice", "floor_sum", "lt_signature",
]
