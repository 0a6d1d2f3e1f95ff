"""Backend selection for the integer reduction kernels.

The compiled Cython copy of ``_impl`` is used when it built successfully;
set ``LIEQ_PURE_PYTHON=1`` to force the interpreted fallback. Both backends
are the same source file, so results are identical either way.
"""

import os

if os.environ.get("LIEQ_PURE_PYTHON"):
    from lieq._kernel import _impl as _backend

    BACKEND = "python"
else:
    try:
        from lieq._kernel import _compiled as _backend  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from lieq._kernel import _impl as _backend  # type: ignore[no-redef]

        BACKEND = "python"

identity_matrix = _backend.identity_matrix
hnf_rows_with_kernel = _backend.hnf_rows_with_kernel
matmul = _backend.matmul
snf_with_transforms = _backend.snf_with_transforms
hnf_rows = _backend.hnf_rows

__all__ = ["BACKEND", "identity_matrix", "matmul", "snf_with_transforms",
           "hnf_rows", "hnf_rows_with_kernel"]
