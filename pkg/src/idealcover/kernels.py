"""Kernel backend selection.

The hot inner loops (structure-constant products, echelon reduction,
quasi-regularity solves, span walks) exist twice: a compiled Cython
extension (`idealcover._ckernels`) and a pure-Python reference
(`idealcover._pykernels`).  The compiled backend is used when it
imported successfully; set IDEALCOVER_KERNELS=pure or =compiled to
force a choice.  Both backends produce bit-identical results.
"""

import os

from . import _pykernels


def load_backend(name=None):
    """Return the kernel module for `name` ('pure', 'compiled', or None=auto)."""
    if name in (None, "", "auto"):
        try:
            from . import _ckernels
            return _ckernels
        except ImportError:
            return _pykernels
    if name == "pure":
        return _pykernels
    if name == "compiled":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


_impl = load_backend(os.environ.get("IDEALCOVER_KERNELS"))

BACKEND = "compiled" if _impl.__name__.endswith("_ckernels") else "pure"

mul = _impl.mul
rref = _impl.rref
reduce_vector = _impl.reduce_vector
closure_rows = _impl.closure_rows
closed_under = _impl.closed_under
associativity_witness = _impl.associativity_witness
identity_scan = _impl.identity_scan
lqr_witness = _impl.lqr_witness
span_bitpack = _impl.span_bitpack
lqr_table = _impl.lqr_table
radical_members = _impl.radical_members
