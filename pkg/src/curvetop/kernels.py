"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
implementation.  Setting the environment variable ``CURVETOP_PURE=1`` forces
the interpreted backend (used by the parity tests and the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("CURVETOP_PURE") == "1":
    from curvetop import _kernels_py as _impl
else:
    try:
        from curvetop import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from curvetop import _kernels_py as _impl

BACKEND = _impl.BACKEND

zx_trim = _impl.zx_trim
zx_add = _impl.zx_add
zx_sub = _impl.zx_sub
zx_neg = _impl.zx_neg
zx_mul = _impl.zx_mul
zx_mul_scalar = _impl.zx_mul_scalar
zx_divexact = _impl.zx_divexact
zx_shift1 = _impl.zx_shift1
zx_eval_int = _impl.zx_eval_int
zx_eval_num_at_fraction = _impl.zx_eval_num_at_fraction
zx_sign_variations = _impl.zx_sign_variations
nm_eval = _impl.nm_eval
nm_gcd = _impl.nm_gcd
nm_resultant = _impl.nm_resultant
nm_interp = _impl.nm_interp
nm_bivar_eval_outer = _impl.nm_bivar_eval_outer
nm_bivar_resultant_points = _impl.nm_bivar_resultant_points
