"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure Python
fallback.  BACKEND names the active backend; benchmarks/bench_kernels.py
compares the two directly.
"""

try:
    from ._ckernels import (  # noqa: F401
        cancellation_search,
        member,
        min_antichain,
        subword,
    )

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build environment
    from ._pykernels import (  # noqa: F401
        cancellation_search,
        member,
        min_antichain,
        subword,
    )

    BACKEND = "python"
