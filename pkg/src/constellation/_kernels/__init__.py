"""JIT dispatch for the numeric kernels.

The kernels are written as plain numpy loop code and compiled with
numba's ``@njit`` when available. Setting ``CONSTELLATION_NO_NUMBA=1``
(or running without numba installed) selects the interpreted pure-numpy
path instead. Both paths execute the same statements in the same order,
so their results agree bit for bit; only the speed differs. See
``benchmarks/kernel_bench.py`` for a comparison.
"""

import os

_DISABLED = os.environ.get("CONSTELLATION_NO_NUMBA", "").strip().lower() in {"1", "true", "yes"}

if _DISABLED:
    _JIT = False
else:
    try:
        from numba import njit

        _JIT = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _JIT = False

if not _JIT:

    def njit(*args, **kwargs):  # noqa: F811 - fallback shadows the numba import
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


def using_numba() -> bool:
    """True when the kernels run JIT-compiled rather than interpreted."""
    return _JIT
