"""ncproj: exact, degree-truncated computations with connected graded algebras.

Algebras are given by generators with positive weights and homogeneous
relations; everything is computed exactly (rationals or a prime field) up
to an explicit truncation bound ``D``.

>>> from ncproj import polynomial_ring
>>> polynomial_ring([1, 1], D=4).hilbert()
[1, 2, 3, 4, 5]
"""
from __future__ import annotations

from .bimodules import (
    BigradedBimodule,
    adjunction_check,
    bar_tensor,
    underline_hom,
    watts_bimodule,
)
from .dsl import load_presentation, parse_polynomial, parse_presentation
from .errors import (
    NcprojError,
    FieldMismatch,
    DimensionMismatch,
    ContextMismatch,
    ParseError,
    PresentationError,
    InhomogeneousRelation,
    DuplicateGenerator,
    ZeroWeight,
    DegreeAboveBound,
    WindowError,
    WindowInsufficient,
    WindowExceeded,
    WindowExceedsBound,
    JActsNonzero,
    NotADerivation,
    NotAnAutomorphism,
    NotAMorphism,
    AlgebraNotConcentrated,
)
from .free import FreeAlgebra, FreePoly, GeneratorInfo, Presentation, commutators
from .groebner import GBBuilder, GradedAlgebra, TruncatedGB, complete
from .ideals import (
    RIGHT,
    TWO_SIDED,
    GradedIdeal,
    check_affine_hypothesis,
    finite_module_check,
    image_ideal,
    is_twosided,
    largest_twosided_inside,
    module_times_ideal,
    quotient_algebra,
    quotient_inflate,
    quotient_pullback,
    torsion_submodule,
)
from .loaders import load_algebra, load_module, load_morphism, load_ore, module_from_spec
from .linalg import GF, QQ, Field, Matrix, ModP, RowSpace, kernel_basis, rank, row_reduce
from .modules import (
    GradedModule,
    ModuleMap,
    coinduce_along,
    direct_sum,
    graded_hom,
    induce_along,
    present_module,
    regular_module,
    restrict_along,
    shift,
    truncate,
)
from .morphism import AlgebraMorphism
from .ore import (
    OreData,
    check_ore_data,
    diagonal_sigma,
    ore_extension,
    ore_hilbert,
    ore_presentation,
    random_inner_delta,
)
from .report import Report, emit_report, parse_report
from .samples import (
    free_algebra,
    polynomial_ring,
    quantum_plane,
    random_algebra,
    random_skew_ring,
    skew_polynomial_ring,
)
from .veronese import (
    check_lemma_I,
    ideal_family,
    min_veronese_gen1,
    projector,
    tails_window_equal,
    verevkin_defect,
    veronese_algebra,
    veronese_coinduce,
    veronese_pullback,
    veronese_pushforward,
)

__version__ = "0.1.0"
