"""Exact computer algebra for equivariant I-functions of local P^n.

All coefficients are exact (arbitrary-precision rationals or cyclotomic
residues) and serialized as strings; parse them with fractions.Fraction
when a numeric value is needed.
"""

try:
    from ._core import Config, DegeneracyError, UsageError, mirror_map, run
except ImportError:  # running from a build tree: find the extension via env
    import importlib.util as _ilu
    import os as _os
    import sys as _sys

    _ext_dir = _os.environ.get("LOCALPN_EXT_DIR")
    _mod = None
    if _ext_dir:
        for _f in _os.listdir(_ext_dir):
            if _f.startswith("_core") and _f.endswith(".so"):
                _spec = _ilu.spec_from_file_location(
                    __name__ + "._core", _os.path.join(_ext_dir, _f)
                )
                _mod = _ilu.module_from_spec(_spec)
                _sys.modules[__name__ + "._core"] = _mod
                _spec.loader.exec_module(_mod)
                break
    if _mod is None:
        raise
    Config = _mod.Config
    DegeneracyError = _mod.DegeneracyError
    UsageError = _mod.UsageError
    mirror_map = _mod.mirror_map
    run = _mod.run

__all__ = ["Config", "DegeneracyError", "UsageError", "mirror_map", "run"]
