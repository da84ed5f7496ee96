"""Exact real-rootedness, interlacing, and poset layer-count polynomials.

Everything computes over rational numbers: root counting via sign-variation
chains, root isolation with certified rational or interval answers, exact
interleaving decisions, the derivative-based polynomial products, and the
layer-count generating polynomials of labelled posets and partition shapes.
"""

from .errors import (
    ElementNotFoundError,
    EmptyPartitionError,
    InputFormatError,
    OutOfRangeError,
    PreconditionFailedError,
    UnknownSuiteError,
    ZeroPolynomialError,
)
from .ferrers import (
    Partition,
    count_reverse_ssyt,
    ferrers_e_poly,
    ferrers_poset,
    hook_content_order_poly,
    hook_product,
    hooks_and_contents,
    partitions_of,
    verify_cover_interlacing,
    young_covers_down,
)
from .interlacing import (
    InterlaceVerdict,
    Relation,
    alternates,
    chain_check,
    interlaces,
    obreschkoff_probe,
)
from .polynomial import (
    ONE,
    X,
    ZERO,
    Polynomial,
    constant,
    format_polynomial_json,
    format_polynomial_text,
    from_roots,
    gcd,
    parse_polynomial_json,
    parse_polynomial_text,
)
from .posets import (
    EMPTY_POSET,
    LabelledPoset,
    SPExpression,
    count_surjective_partitions,
    delete_element,
    disjoint_union,
    e_inverse,
    e_operator,
    e_polynomial,
    order_polynomial,
    ordinal_sum,
    parse_sp,
    poset_from_json_dict,
    poset_to_json_dict,
    relabel,
    singleton,
    sp_build,
)
from .roots import (
    RootLocation,
    Rootedness,
    count_roots,
    is_real_rooted,
    isolate_roots,
    log_concavity_check,
    roots_in_interval,
    squarefree_part,
    sturm_chain,
    yun_decomposition,
)
from .suites import VerificationReport, report_from_json_dict, run_suite, suite_names
from .transforms import (
    AplusReport,
    alt_diamond,
    aplus_check_diamond,
    d_phi_diamond,
    diamond,
    h_xi,
    hermite_poulain,
    laguerre_transform,
    lphi_diamond,
    schur_product,
)

__version__ = "0.1.0"

__all__ = [
    "AplusReport",
    "ElementNotFoundError",
    "EMPTY_POSET",
    "EmptyPartitionError",
    "InputFormatError",
    "InterlaceVerdict",
    "LabelledPoset",
    "ONE",
    "OutOfRangeError",
    "Partition",
    "Polynomial",
    "PreconditionFailedError",
    "Relation",
    "RootLocation",
    "Rootedness",
    "SPExpression",
    "UnknownSuiteError",
    "VerificationReport",
    "X",
    "ZERO",
    "ZeroPolynomialError",
    "alt_diamond",
    "alternates",
    "aplus_check_diamond",
    "chain_check",
    "constant",
    "count_reverse_ssyt",
    "count_roots",
    "count_surjective_partitions",
    "d_phi_diamond",
    "delete_element",
    "diamond",
    "disjoint_union",
    "e_inverse",
    "e_operator",
    "e_polynomial",
    "ferrers_e_poly",
    "ferrers_poset",
    "format_polynomial_json",
    "format_polynomial_text",
    "from_roots",
    "gcd",
    "h_xi",
    "hermite_poulain",
    "hook_content_order_poly",
    "hook_product",
    "hooks_and_contents",
    "interlaces",
    "is_real_rooted",
    "isolate_roots",
    "laguerre_transform",
    "log_concavity_check",
    "lphi_diamond",
    "obreschkoff_probe",
    "order_polynomial",
    "ordinal_sum",
    "parse_polynomial_json",
    "parse_polynomial_text",
    "parse_sp",
    "partitions_of",
    "poset_from_json_dict",
    "poset_to_json_dict",
    "relabel",
    "report_from_json_dict",
    "roots_in_interval",
    "run_suite",
    "schur_product",
    "singleton",
    "sp_build",
    "squarefree_part",
    "sturm_chain",
    "suite_names",
    "verify_cover_interlacing",
    "yun_decomposition",
    "young_covers_down",
]
