"""Reasoning engine for assertoric syllogistic."""

from .core import (KnowledgeBase, ParseError, Sentence, all_sentences,
                   contradictory, essential_terms, intern_sentence,
                   is_plainly_contradictory, parse_kb, parse_sentence)
from .deduction import (D, D_DOUBLE, D_PRIME, G, G_DOUBLE, G_PRIME, PD, WD,
                        SYSTEMS, Consistent, Contradictory, Derivation,
                        EssentialScopeError, PlainlyContradictory, Rule,
                        Sequent, System, apply_rule, check_derivation,
                        check_g2_derivation, closure, consistent,
                        derivation_of, derives, emit_g2_derivation, entails,
                        equiv_classes, find_chain, g_derives, is_consistent,
                        saturate)
from .construction import (ContradictoryInput, assign_leibniz, first_n_primes,
                           pd_model, venn_direct)
from .models import (LeibnizModel, OrderModel, Structure, VennModel,
                     basic_theory, basically_equivalent, canonical_structure,
                     core_substructure, is_d_model, is_df_model,
                     is_dprime_model, is_g_model, order_completion,
                     order_to_com, pd_modify, quotient, satisfies,
                     venn_from_df)
from .sorites import (ds_refutation, is_sorites, search_sorites,
                      synthesize_sorites)
from .independence import (IndependenceReport, RuleStatus, check_rule_status,
                           closure_without, full_report)

__all__ = [name for name in dir() if not name.startswith("_")]
