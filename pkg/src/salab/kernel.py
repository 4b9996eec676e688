"""Kernel backend selection.

Imports the compiled `_speedups` extension when present, otherwise the
pure-Python `_speedups_py`. Set SALAB_KERNEL=py (or =c) to force a backend;
forcing `c` when the extension is missing raises, so CI can assert the
build really produced it.
"""

import os

_choice = os.environ.get("SALAB_KERNEL", "").strip().lower()

if _choice == "py":
    from . import _speedups_py as _impl
elif _choice == "c":
    from . import _speedups as _impl  # type: ignore[attr-defined]
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _speedups_py as _impl

BACKEND = _impl.BACKEND

exp_add = _impl.exp_add
exp_sub = _impl.exp_sub
exp_divides = _impl.exp_divides
exp_lcm = _impl.exp_lcm
exp_deg = _impl.exp_deg
exp_coprime = _impl.exp_coprime
grevlex_key = _impl.grevlex_key
lex_key = _impl.lex_key
grlex_key = _impl.grlex_key
ORDER_KEYS = _impl.ORDER_KEYS
dict_add = _impl.dict_add
dict_mul = _impl.dict_mul
dict_axpy = _impl.dict_axpy
dict_scale = _impl.dict_scale
