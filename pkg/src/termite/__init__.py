"""Termination prover for first-order term rewrite systems.

Four proof methods (LPO, KBO, linear polynomial and matrix
interpretations) with a bounded deterministic parameter search that can be
restricted, down to a single fixed proof, by human-readable templates.
"""

from .errors import ConfigError, ParseError, TermiteError, ValidationError
from .interp import (
    LinForm,
    MatFunc,
    MatrixInterp,
    PolyFunc,
    PolyInterp,
    eval_numeric,
    linear_form,
    monotone,
    orients,
)
from .orders import (
    Cmp,
    Precedence,
    WeightFn,
    kbo_admissible,
    kbo_gt,
    kbo_weight,
    lpo_gt,
    prec_compare,
)
from .solver import (
    Certificate,
    MaybeReason,
    Outcome,
    SearchConfig,
    cert_to_strategy,
    check_certificate,
    certificate_failures,
    prove,
    render_outcome,
)
from .templates import (
    Mode,
    atom_holds,
    evaluate,
    format_template,
    parse_inters,
    parse_prec,
    parse_weights,
    to_dnf,
    validate,
)
from .trs import App, Rule, Symbol, Trs, Var, format_rule, format_term, format_trs, parse_trs

__all__ = [
    "App",
    "Certificate",
    "Cmp",
    "ConfigError",
    "LinForm",
    "MatFunc",
    "MatrixInterp",
    "MaybeReason",
    "Mode",
    "Outcome",
    "ParseError",
    "PolyFunc",
    "PolyInterp",
    "Precedence",
    "Rule",
    "SearchConfig",
    "Symbol",
    "TermiteError",
    "Trs",
    "ValidationError",
    "Var",
    "WeightFn",
    "atom_holds",
    "cert_to_strategy",
    "certificate_failures",
    "check_certificate",
    "eval_numeric",
    "evaluate",
    "format_rule",
    "format_template",
    "format_term",
    "format_trs",
    "kbo_admissible",
    "kbo_gt",
    "kbo_weight",
    "linear_form",
    "lpo_gt",
    "monotone",
    "orients",
    "parse_inters",
    "parse_prec",
    "parse_trs",
    "parse_weights",
    "prec_compare",
    "prove",
    "render_outcome",
    "to_dnf",
    "validate",
]
