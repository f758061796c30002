"""Kernel selection: compiled extension when available, pure Python otherwise.

Set GSP4EULER_PURE=1 to force the Python fallback (used by the benchmark
and by tests that compare the two implementations).
"""

import os

from . import _kernel_py

if os.environ.get("GSP4EULER_PURE"):
    impl = _kernel_py
else:
    try:
        from . import _kernel_c as impl  # type: ignore[attr-defined]
    except ImportError:
        impl = _kernel_py

BACKEND = impl.BACKEND
mat4_mul_mod = impl.mat4_mul_mod
mat4_mulvec_count_zero_mod = impl.mat4_mulvec_count_zero_mod
lattice_key_mod = impl.lattice_key_mod


def available_backends():
    out = {"python": _kernel_py}
    try:
        from . import _kernel_c
        out["cython"] = _kernel_c
    except ImportError:
        pass
    return out
