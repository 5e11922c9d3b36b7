"""Computable stand-ins for algorithmic complexity of bit strings.

Two backends are registered:

``lz76``
    Phrase count ``c`` of the Lempel-Ziv (1976) exhaustive-history parsing,
    reported as ``c * log2(c + 1)`` bits.  Pure Python, identical on every
    platform.  This is the default.
``deflate``
    Size in bits of the raw DEFLATE stream (zlib, level 9, no header) of the
    string written as ASCII ``'0'``/``'1'``.  Depends on the zlib build, so
    estimates are flagged ``platform_dependent``.

Conditional complexity uses the concatenation proxy
``C(x + s) - C(x)``, clamped at zero.  The default backend can be set with
the ``ABDUCER_BACKEND`` environment variable.
"""

from __future__ import annotations

import math
import os
import warnings
import zlib
from dataclasses import dataclass

from .errors import BackendUnavailable, OrderMismatch, SmallInputWarning
from .model import matrix_bits

SMALL_INPUT_BITS = 64
DEFAULT_BACKEND = "lz76"


@dataclass(frozen=True)
class ComplexityEstimate:
    bits: float
    backend: str
    input_length: int
    small_input: bool = False
    platform_dependent: bool = False

    def __float__(self):
        return float(self.bits)


def lz76_phrases(s):
    """Number of phrases in the LZ76 parsing of ``s``.

    Each phrase is the shortest prefix of the remaining input that cannot be
    copied from earlier text (the copy may overlap the phrase itself); a
    trailing copyable remainder counts as one last phrase.  Kaspar and
    Schuster's linear scan.
    """
    n = len(s)
    if n <= 1:
        return n
    c, l, i, k, k_max = 1, 1, 0, 1, 1
    while True:
        if s[i + k - 1] == s[l + k - 1]:
            k += 1
            if l + k > n:
                c += 1
                break
        else:
            k_max = max(k, k_max)
            i += 1
            if i == l:
                c += 1
                l += k_max
                if l + 1 > n:
                    break
                i, k, k_max = 0, 1, 1
            else:
                k = 1
    return c


def _lz76_bits(s):
    c = lz76_phrases(s)
    return c * math.log2(c + 1)


def _deflate_bits(s):
    if not s:
        return 0
    comp = zlib.compressobj(9, zlib.DEFLATED, -15)
    data = comp.compress(s.encode("ascii")) + comp.flush()
    return 8 * len(data)


_BACKENDS = {
    "lz76": (_lz76_bits, False),
    "deflate": (_deflate_bits, True),
}


def register_backend(name, func, platform_dependent=True):
    """Add a compressor: ``func(bit_string) -> size in bits``."""
    _BACKENDS[name] = (func, platform_dependent)


def backends():
    return sorted(_BACKENDS)


def default_backend():
    return os.environ.get("ABDUCER_BACKEND") or DEFAULT_BACKEND


def _resolve(backend):
    name = backend or default_backend()
    try:
        func, platform = _BACKENDS[name]
    except KeyError:
        raise BackendUnavailable(
            f"unknown complexity backend {name!r}; available: {', '.join(backends())}"
        ) from None
    return name, func, platform


def _check_bits(s):
    if not isinstance(s, str) or s.strip("01"):
        raise ValueError("expected a string of '0' and '1' characters")


def _warn_small(n, stacklevel=3):
    small = 0 < n < SMALL_INPUT_BITS
    if small:
        warnings.warn(
            f"{n}-bit input is too short for compression to detect regularities",
            SmallInputWarning,
            stacklevel=stacklevel,
        )
    return small


def plain_complexity(s, backend=None):
    _check_bits(s)
    name, func, platform = _resolve(backend)
    small = _warn_small(len(s))
    return ComplexityEstimate(float(func(s)), name, len(s), small, platform)


def conditional_complexity(s, x, backend=None):
    """Estimate of the complexity of ``s`` given ``x``: ``max(0, C(xs) - C(x))``."""
    _check_bits(s)
    _check_bits(x)
    name, func, platform = _resolve(backend)
    small = _warn_small(len(s))
    bits = max(0.0, float(func(x + s)) - float(func(x)))
    return ComplexityEstimate(bits, name, len(s), small, platform)


def score_relation_change(before, after, backend=None):
    """Conditional complexity of ``after``'s bits given ``before``'s bits."""
    if tuple(before.order) != tuple(after.order):
        raise OrderMismatch("relation matrices use different world orders")
    return conditional_complexity(matrix_bits(after), matrix_bits(before), backend)
