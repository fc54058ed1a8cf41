"""Abstract argumentation semantics: classical, SCC-recursive (cf2/stg2
and their transfinite fixed-point variants) and SCC-prioritized
(cf1.5/stg1.5), plus constructive algorithms, evaluation-criteria checkers,
infinite-family truncation studies and a brute-force validation oracle.
"""

from .construct import (
    FinitaryOrder,
    greedy_cf15,
    lemma1_order,
    lex_greedy_stage,
    lex_scc_stg15,
)
from .criteria import (
    CriterionReport,
    check_directionality,
    check_i_maximality,
    check_reinstatement,
    check_skepticism_adequacy,
    skepticism_compare,
)
from .errors import (
    AfsemError,
    FrameworkError,
    LimitError,
    ParseError,
    PremiseError,
)
from .formats import (
    emit_report,
    parse_apx,
    parse_tgf,
    serialize_apx,
    serialize_tgf,
)
from .framework import (
    Extension,
    Framework,
    build_framework,
    characteristic,
    conflicts,
    defends,
    is_conflict_free,
    neighborhoods,
    restrict,
    reverse,
)
from .generators import (
    Generator,
    TruncationReport,
    builtin_generator,
    truncate,
    truncation_study,
)
from .oracle import brute_force, random_framework
from .scc import SccDecomposition, d_s, decompose, unattacked_sets
from .scc_semantics import (
    ALL_SEMANTICS,
    ComponentTrace,
    DeltaTrace,
    component_trace,
    delta_lfp,
    delta_step,
    enumerate_semantics,
    is_cf2,
    is_cf15,
    is_icf2,
    is_istg2,
    is_stg2,
    is_stg15,
    reachable_mod,
    separation,
)
from .semantics import (
    ExtensionSet,
    enumerate_conflict_free,
    enumerate_naive,
    enumerate_stage,
    grounded,
)

__all__ = [
    "ALL_SEMANTICS",
    "AfsemError",
    "ComponentTrace",
    "CriterionReport",
    "DeltaTrace",
    "Extension",
    "ExtensionSet",
    "FinitaryOrder",
    "Framework",
    "FrameworkError",
    "Generator",
    "LimitError",
    "ParseError",
    "PremiseError",
    "SccDecomposition",
    "TruncationReport",
    "brute_force",
    "build_framework",
    "builtin_generator",
    "characteristic",
    "check_directionality",
    "check_i_maximality",
    "check_reinstatement",
    "check_skepticism_adequacy",
    "component_trace",
    "conflicts",
    "d_s",
    "decompose",
    "defends",
    "delta_lfp",
    "delta_step",
    "emit_report",
    "enumerate_conflict_free",
    "enumerate_naive",
    "enumerate_semantics",
    "enumerate_stage",
    "greedy_cf15",
    "grounded",
    "is_cf15",
    "is_cf2",
    "is_conflict_free",
    "is_icf2",
    "is_istg2",
    "is_stg15",
    "is_stg2",
    "lemma1_order",
    "lex_greedy_stage",
    "lex_scc_stg15",
    "neighborhoods",
    "parse_apx",
    "parse_tgf",
    "random_framework",
    "reachable_mod",
    "restrict",
    "reverse",
    "separation",
    "serialize_apx",
    "serialize_tgf",
    "skepticism_compare",
    "truncate",
    "truncation_study",
    "unattacked_sets",
]
