"""Kernel selection: compiled extension when present, pure Python otherwise.

The kernels run toggle-mode antichain rowmotion over prime-field matrix
labels, the hot loop of the periodicity fuzzer.  Both backends share one
interface; `backend_name()` reports which one is live, and the benchmark
drives both side by side.
"""

from __future__ import annotations

try:
    from . import _speedups as _impl
except ImportError:  # extension not built; fall back to the reference kernel
    from . import _kernel_py as _impl

from . import _kernel_py
from .labeling import Labeling


def backend_name():
    return _impl.BACKEND


def available_backends():
    """Mapping backend name -> kernel module, for side-by-side comparison."""
    out = {_kernel_py.BACKEND: _kernel_py}
    if _impl is not _kernel_py:
        out[_impl.BACKEND] = _impl
    return out


def make_engine(poset, d, p, module=None):
    """Build a toggle-rowmotion engine for ``poset`` over d x d matrices mod p."""
    mod = module or _impl
    topo = list(poset.topo_order())
    up = [list(poset.up_covers(x)) for x in range(poset.n)]
    down = [list(poset.down_covers(x)) for x in range(poset.n)]
    upsets = [[x for x in reversed(topo) if poset.leq(v, x)] for v in range(poset.n)]
    downsets = [[x for x in topo if poset.leq(x, v)] for v in range(poset.n)]
    return mod.FpToggleEngine(up, down, topo, upsets, downsets, d, p)


def labeling_to_flat(g):
    """Flatten a prime-field matrix labeling to the kernel wire format."""
    flat = []
    for mat in g.values:
        for row in mat:
            flat.extend(row)
    return flat


def flat_to_labeling(realm, flat):
    """Rebuild a labeling from the kernel wire format."""
    d = realm.d
    dd = d * d
    values = []
    for start in range(0, len(flat), dd):
        block = flat[start:start + dd]
        values.append(tuple(tuple(block[i * d:(i + 1) * d]) for i in range(d)))
    return Labeling(realm, values)
