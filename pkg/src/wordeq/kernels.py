"""Kernel backend selection: compiled extension when present, else pure Python.

The hot inner loops (word-tuple scans of the bounded oracle and the
exhaustive conjunction-pairing check) live in ``_speedups`` (Cython) with a
semantically identical fallback in ``_fallback``.  ``BACKEND`` names the
active implementation; ``get_backend`` lets benchmarks and parity tests load
a specific one.
"""

from __future__ import annotations

try:
    from . import _speedups as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _fallback as _impl

    BACKEND = "python"

scan_fixed_lengths = _impl.scan_fixed_lengths
lemma2_violations = _impl.lemma2_violations


def get_backend(name: str):
    """Return the named kernel module ("cython" or "python")."""
    if name == "python":
        from . import _fallback

        return _fallback
    if name == "cython":
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    out = ["python"]
    try:
        from . import _speedups  # noqa: F401

        out.insert(0, "cython")
    except ImportError:  # pragma: no cover
        pass
    return out
