"""Cycle census and Kempe-chain verification toolkit for color-critical graphs."""

from .canon import are_isomorphic, canonical_form
from .coloring import Coloring, chromatic_number, find_coloring, is_colorable, is_critical, is_proper
from .corpus import (
    Corpus,
    CorpusEntry,
    all_graphs_up_to,
    generate_exhaustive,
    hajos_join,
    ingest_graph6,
    load_corpus,
    save_corpus,
)
from .cycles import (
    CycleCensus,
    CycleSeq,
    census_mod,
    check_chen_saito,
    enumerate_cycles,
    find_admissible_paths,
)
from .errors import (
    ContractViolation,
    CorpusCorruptionError,
    Graph6Error,
    TheoremViolation,
    UnsupportedSizeError,
)
from .graphs import Edge, Graph, is_connected, parse_graph6, structural_predicates, write_graph6
from .kempe import (
    CyclicPerm,
    SigmaDigraph,
    accessible_set,
    build_injection_f,
    build_sigma_subdigraph,
    cyclic_perms,
    decompose_closed_walk,
    directed_cycles,
    extract_one_mod_k,
    extract_zero_mod_r,
    kempe_shift,
    lemma_paths,
    neighbor_prescribed_coloring,
)
from .verify import (
    Report,
    VerificationRecord,
    verify_borrowed_theorems,
    verify_one_mod_k,
    verify_structure_lemmas,
    verify_theorem_main,
)

__version__ = "0.1.0"
