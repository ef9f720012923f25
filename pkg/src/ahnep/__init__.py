"""Accepting hybrid networks of evolutionary processors: a deterministic
simulator, topology builders and transformations, and a SAT compiler.
"""

__version__ = "0.1.0"

from .model import (EMPTY_WORD, Configuration, FilterSpec, Graph, HaltingMode,
                    Mode, Network, Processor, RejectReason, Rule, RuleKind,
                    RunLimits, RunOutcome, Strength, Symbol, Verdict, Word,
                    alph, edge_key, intern_symbol, make_processor,
                    validate_network, word)
from .semantics import (IllegalModeError, apply_rule, apply_ruleset,
                        apply_ruleset_language, passes_input, passes_output,
                        strong_predicate, weak_predicate)
from .engine import (InputWordError, NetworkValidationError, StepKind, Trace,
                     TraceEntry, accepts_all, check_halt, communication_step,
                     evolutionary_step, initial_configuration, run)
from .topology import (build_complete_with_loops, build_grid, build_ring,
                       build_star, grid_node, is_complete_with_loops, is_grid,
                       is_ring, is_star, max_degree)
from .transform import (EquivReport, TransformError, check_equivalence,
                        enumerate_words, prune_to_degree3, to_grid, to_star)
from .sat import (CnfFormula, DimacsError, SatLimitError, brute_force_sat,
                  build_sat_network, parse_dimacs, solve)
from .formats import (FORMAT_VERSION, ParseError, format_word, parse_network,
                      parse_word, serialize_network, serialize_trace)
