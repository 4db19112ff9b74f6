"""Backend selection for the numerical kernels.

The compiled ``_core`` extension is used when it imports; otherwise the
pure-Python ``_core_py`` module is used. Setting ``BERGER_BACKEND=python``
forces the fallback.
"""
import os

from . import _core_py

if os.environ.get("BERGER_BACKEND", "").lower() == "python":
    core = _core_py
    BACKEND = "python"
else:
    try:
        from . import _core as core
    except ImportError:
        core = _core_py
        BACKEND = "python"
    else:
        BACKEND = "cython"

DET_CUTOFF = _core_py.DET_CUTOFF

mul = core.mul
pullback = core.pullback
inner = core.inner
frame_coords = core.frame_coords
embed = core.embed
tangents = core.tangents
richardson_second = core.richardson_second
surface_point = core.surface_point
surface_batch = core.surface_batch
structure_constants = core.structure_constants
koszul = core.koszul
curvature_numerator = core.curvature_numerator
connection_batch = core.connection_batch
