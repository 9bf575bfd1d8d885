"""Tableaux over signed alphabets: bumping, plactic classes, RSK, and a
small tableau ring.

The building blocks are signed alphabets (totally ordered letters, each of
parity 0 or 1) and super semistandard Young tableaux over them.  On top of
those sit the four bumping procedures and their word fold, the plactic
congruence with its Greene invariants, the correspondence between two-rowed
arrays and equal-shape tableau pairs together with its symmetry involution,
and formal sums of tableaux with a Pieri-style product check.
"""

from .alphabet import (
    SignedAlphabet,
    alphabet_from_json,
    alphabet_to_json,
    conjugate_alphabet,
    make_alphabet,
    product_alphabet,
)
from .bumping import (
    col_delete,
    col_insert,
    col_insert_trace,
    row_delete,
    row_insert,
    row_insert_trace,
    row_insert_word,
    tableau_of_word,
)
from .errors import (
    AlphabetError,
    AlphabetMismatchError,
    BoundExceededError,
    CornerError,
    ForeignLetterError,
    HypothesisError,
    ShapeError,
    SuperplacticError,
    ValidationError,
)
from .plactic import (
    PlacticClass,
    canonical_word,
    equivalent,
    greene_col,
    greene_profile,
    greene_row,
    greene_via_shape,
    is_column_word,
    is_row_word,
    knuth_neighbors,
    plactic_class,
    z2_degree,
)
from .ring import (
    FormalSum,
    PieriReport,
    pieri_check,
    ring_product,
    s_col,
    s_lambda,
    s_row,
)
from .rsk import (
    ProbeReport,
    TwoRowedArray,
    array_from_json,
    array_involution,
    array_to_json,
    c_lambda,
    check_susy,
    class_size,
    enumerate_arrays,
    has_symmetry,
    rsk_forward,
    rsk_inverse,
    split_array,
    symmetry_probe,
    validate_array,
    word_to_array,
)
from .shape import (
    SkewDiagram,
    as_partition,
    cells,
    conjugate_partition,
    contains,
    is_horizontal_strip,
    is_vertical_strip,
    partitions,
)
from .tableau import (
    SkewTableau,
    Tableau,
    Word,
    check_tableau,
    enumerate_standard,
    enumerate_tableaux,
    pretty,
    split_by_threshold,
    tableau_from_json,
    tableau_to_json,
    transpose,
    validate,
    word_of,
)

__version__ = "0.1.0"
