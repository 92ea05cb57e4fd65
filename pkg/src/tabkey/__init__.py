"""Keys of Young tableaux and alternating sign matrices.

The left key of a tableau is computed by removing the -1 entries of its
sign matrix; the right key goes through the complement.  The frank-word
construction in :mod:`tabkey.plactic` provides an independent route.
"""
from .asm import (AsmError, asm_inf, asm_leq, asm_sup, asm_to_monotone,
                  key_of_asm, monotone_to_asm, mt_inf, mt_leq, mt_sup,
                  permutation_matrix, permutation_of, pseudo_key_of_asm,
                  validate_asm, validate_monotone)
from .enumeration import (MarkedPattern, MinusOneCensus, a_n_1, a_n_2,
                          asm_of_marked_pattern, census, count_132,
                          count_132_bruteforce, enumerate_asms,
                          marked_pattern_of)
from .kernels import BACKEND
from .plactic import (column_exchange, frank_word, knuth_equivalent,
                      left_key_classical, p_tableau, right_key_classical)
from .signmatrix import (SignMatrix, SignMatrixError, eliminate,
                         find_removable, from_tableau, left_key_elimination,
                         neighbours, pseudo_key, pseudo_remove,
                         remove_minus_one, right_key_via_complement,
                         to_tableau)
from .tableau import (ParseError, TableauError, YoungTableau, complement,
                      format_tableau, is_key, parse_tableau, validate, word)

__version__ = "0.1.0"
