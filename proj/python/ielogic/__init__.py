"""Intuitionistic epistemic logics Int_K, IEL- and IEL.

Formulas may be passed as text ("K p -> ~~p") or as parsed Formula objects.
"""

from ._core import (
    Formula,
    KripkeModel,
    LanguageError,
    Logic,
    ModelError,
    ParseError,
    ProofFormatError,
    Verdict,
    atoms,
    builtin_model,
    check_proof,
    count_models,
    decide,
    decide_ipc,
    find_classical_countermodel,
    find_countermodel,
    glivenko_translate,
    godel_translate,
    kolmogorov_translate,
    library_proof,
    library_proofs,
    parse,
    parse_logic,
    parse_model,
    render,
    run_paper_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
