"""Natural multidimensional numbers.

A polymset of dimension m assigns a positive multiplicity to each of a
finite set of m-tuples of non-negative integers.  For each dimension those
values carry a commutative semiring (pointwise sum, index convolution) and
are generated from the empty polymset by unit increments; this package
provides the value type, the arithmetic, brute-force reference routes with
a finite-universe law checker, a small expression language with a CLI, a
JSON interchange format, and an HTTP service.
"""

__version__ = "0.1.0"

from mnum.interchange import DocumentError, canonicalize, decode, dumps, encode, loads
from mnum.oracle import (
    LawReport,
    LawResult,
    UniverseSpec,
    UniverseTooLarge,
    add_via_successors,
    check_laws,
    enumerate_universe,
    mul_recursive,
    pointwise_mul,
)
from mnum.peano import (
    GenerationTrace,
    NoSuchCopy,
    generate,
    is_immediate_predecessor,
    is_immediate_successor,
    pd,
    sc,
    sc_pow,
    trace_of,
)
from mnum.polymset import (
    BoundednessReport,
    ConservationViolation,
    DimensionMismatch,
    DomainBase,
    Index,
    InvalidAxis,
    InvalidDimension,
    InvalidSplitter,
    Polymset,
    RelationReport,
    delta_splitter,
    even_splitter,
)
from mnum.semiring import (
    TetratomyResult,
    add,
    compare_tetratomy,
    mul,
    one,
    shift,
    unit,
    zero,
)

__all__ = [
    "__version__",
    "BoundednessReport",
    "ConservationViolation",
    "DimensionMismatch",
    "DocumentError",
    "DomainBase",
    "GenerationTrace",
    "Index",
    "InvalidAxis",
    "InvalidDimension",
    "InvalidSplitter",
    "LawReport",
    "LawResult",
    "NoSuchCopy",
    "Polymset",
    "RelationReport",
    "TetratomyResult",
    "UniverseSpec",
    "UniverseTooLarge",
    "add",
    "add_via_successors",
    "canonicalize",
    "check_laws",
    "compare_tetratomy",
    "decode",
    "delta_splitter",
    "dumps",
    "encode",
    "enumerate_universe",
    "even_splitter",
    "generate",
    "is_immediate_predecessor",
    "is_immediate_successor",
    "loads",
    "mul",
    "mul_recursive",
    "one",
    "pd",
    "pointwise_mul",
    "sc",
    "sc_pow",
    "shift",
    "trace_of",
    "unit",
    "zero",
]
