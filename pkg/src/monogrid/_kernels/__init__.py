"""Search kernel backends: compiled (Cython) when built, pure Python otherwise.

Selection order: explicit name argument, then the MONOGRID_BACKEND
environment variable, then compiled-if-available.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _speedups as _compiled
except ImportError:  # extension not built; the pure fallback is complete
    _compiled = None


def get_backend(name: str | None = None):
    if name is None:
        name = os.environ.get("MONOGRID_BACKEND") or "auto"
    if name == "auto":
        return _compiled if _compiled is not None else pure
    if name == "pure":
        return pure
    if name == "cython":
        if _compiled is None:
            raise RuntimeError(
                "compiled kernels are not available; build the extension "
                "(pip install -e . --no-build-isolation) or use backend='pure'"
            )
        return _compiled
    raise ValueError(f"unknown backend {name!r}; expected 'auto', 'cython' or 'pure'")


def available_backends() -> list[str]:
    names = ["pure"]
    if _compiled is not None:
        names.insert(0, "cython")
    return names


def default_backend_name() -> str:
    return get_backend().BACKEND_NAME
