"""Constructors for the physical circuit elements.

All elements are real-coefficient Bogoliubov transforms:

* beam splitter with mixing angle theta on an ordered pair (m1, m2):
      m1' =  cos(theta) m1 + sin(theta) m2
      m2' = -sin(theta) m1 + cos(theta) m2
* non-degenerate parametric amplifier (NOPA, two-mode squeezer) with
  squeeze parameter r:
      m1' = cosh(r) m1 - sinh(r) m2^dag
      m2' = cosh(r) m2 - sinh(r) m1^dag
* the collect/distribute beam-splitter cascades that concentrate N identical
  inputs into one mode and split one mode evenly over M outputs.

Chains are assembled by composing embedded two-mode elements rather than
writing closed-form N-mode matrices, mirroring the table-top layout.
"""

from __future__ import annotations

import numpy as np

from .gaussian import (
    BogoliubovTransform,
    compose,
    embed,
    identity_transform,
    mode_index,
)

def _pair(modes) -> tuple[int, int]:
    m1, m2 = (mode_index(m) for m in modes)
    if m1 == m2:
        raise ValueError(f"modes must be distinct, got ({m1}, {m2})")
    return m1, m2


def beam_splitter(theta: float, modes=(0, 1)) -> BogoliubovTransform:
    """Two-mode beam splitter; passive (B = 0), orthogonal on the pair."""
    m1, m2 = _pair(modes)
    n = max(m1, m2) + 1
    A = np.eye(n, dtype=complex)
    c, s = np.cos(theta), np.sin(theta)
    A[m1, m1] = c
    A[m1, m2] = s
    A[m2, m1] = -s
    A[m2, m2] = c
    return BogoliubovTransform(A=A, B=np.zeros((n, n), dtype=complex))


def nopa(r: float, modes=(0, 1)) -> BogoliubovTransform:
    """Two-mode squeezer with amplitude gain cosh(r) on both modes."""
    m1, m2 = _pair(modes)
    n = max(m1, m2) + 1
    A = np.eye(n, dtype=complex)
    B = np.zeros((n, n), dtype=complex)
    A[m1, m1] = A[m2, m2] = np.cosh(r)
    B[m1, m2] = B[m2, m1] = -np.sinh(r)
    return BogoliubovTransform(A=A, B=B)


def _passive_pair(a11: float, a12: float, a21: float, a22: float,
                  pair: tuple[int, int], total: int) -> BogoliubovTransform:
    """Arbitrary passive 2x2 block embedded into a `total`-mode register."""
    block = BogoliubovTransform(
        A=np.array([[a11, a12], [a21, a22]], dtype=complex),
        B=np.zeros((2, 2), dtype=complex),
    )
    return embed(block, list(pair), total)


def collect_chain(N: int, modes=None) -> BogoliubovTransform:
    """Cascade of N-1 beam splitters concentrating N equal inputs into one mode.

    Step j (1-based) mixes the running collected mode d_j with input j+1:

        d_{j+1}  = sqrt(j/(j+1)) d_j + sqrt(1/(j+1)) c_{j+1}
        out_{j+1} = sqrt(1/(j+1)) d_j - sqrt(j/(j+1)) c_{j+1}

    so N identical coherent amplitudes xi leave sqrt(N) xi on the first listed
    mode and vacuum on the rest.  The collected signal stays on modes[0].
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if modes is None:
        modes = list(range(N))
    idx = [mode_index(m) for m in modes]
    if len(idx) != N or len(set(idx)) != N:
        raise ValueError(f"need {N} distinct modes, got {idx}")
    total = max(idx) + 1
    t = identity_transform(total)
    for j in range(1, N):
        keep = np.sqrt(j / (j + 1.0))
        leak = np.sqrt(1.0 / (j + 1.0))
        step = _passive_pair(keep, leak, leak, -keep, (idx[0], idx[j]), total)
        t = compose(step, t)
    return t


def distribute_chain(M: int, modes=None) -> BogoliubovTransform:
    """Cascade of M-1 beam splitters splitting modes[0] evenly over M outputs.

    Step j taps the running signal e_j into fresh mode j:

        out_j   = sqrt(1/(M-j+1)) e_j + sqrt((M-j)/(M-j+1)) a_j
        e_{j+1} = sqrt((M-j)/(M-j+1)) e_j - sqrt(1/(M-j+1)) a_j

    Every output acquires signal coefficient 1/sqrt(M); the last split signal
    e_M stays on modes[0].
    """
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if modes is None:
        modes = list(range(M))
    idx = [mode_index(m) for m in modes]
    if len(idx) != M or len(set(idx)) != M:
        raise ValueError(f"need {M} distinct modes, got {idx}")
    total = max(idx) + 1
    t = identity_transform(total)
    for j in range(1, M):
        tap = np.sqrt(1.0 / (M - j + 1.0))
        keep = np.sqrt((M - j) / (M - j + 1.0))
        step = _passive_pair(keep, -tap, tap, keep, (idx[0], idx[j]), total)
        t = compose(step, t)
    return t
