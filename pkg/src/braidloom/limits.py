"""Resource caps shared across the package.

All potentially explosive computations (free-group images, band words,
state sums, enumeration frontiers) check a cap and raise
:class:`ResourceLimitError` instead of grinding on.  Defaults are generous
for desk-scale work and can be overridden per call or through environment
variables.
"""

from __future__ import annotations

import os

# Free-group image letters (total across all generator images) and general
# braid-word length guard.  Overridden by BRAIDLOOM_MAX_WORD.
DEFAULT_MAX_WORD = 1_000_000

# Band-word (pure braid letter) cap.
DEFAULT_MAX_BANDS = 100_000

# Kauffman state-sum letter cap: 2^l smoothings are enumerated.
DEFAULT_BRACKET_LETTERS = 24

# Hecke-algebra caps: the permutation basis has strands! elements.
DEFAULT_HECKE_STRANDS = 7
DEFAULT_HECKE_LETTERS = 30

# Enumeration frontier (visited tuples).
DEFAULT_ENUM_FRONTIER = 10_000_000


class ResourceLimitError(RuntimeError):
    """A configured resource cap was exceeded."""


def max_word_letters() -> int:
    """Word/image letter cap, honouring BRAIDLOOM_MAX_WORD."""
    raw = os.environ.get("BRAIDLOOM_MAX_WORD")
    if raw is None:
        return DEFAULT_MAX_WORD
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"BRAIDLOOM_MAX_WORD must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError("BRAIDLOOM_MAX_WORD must be positive")
    return value


def default_jobs() -> int:
    """Worker count for parallel verbs, honouring BRAIDLOOM_JOBS."""
    raw = os.environ.get("BRAIDLOOM_JOBS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"BRAIDLOOM_JOBS must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError("BRAIDLOOM_JOBS must be positive")
    return value
