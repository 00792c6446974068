"""Kernel selection: the compiled extension when built, pure Python otherwise."""

from . import pure

try:
    from . import _native as native
except ImportError:
    native = None

BACKEND = "native" if native is not None else "pure"
diag_line_histogram = (native or pure).diag_line_histogram


def backends():
    """Importable kernel implementations keyed by name."""
    found = {"pure": pure}
    if native is not None:
        found["native"] = native
    return found
