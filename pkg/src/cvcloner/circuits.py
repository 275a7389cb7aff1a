"""The cloning machines, built as Bogoliubov transforms.

Three constructions:

* ``asym_direct(gamma)`` -- the asymmetric 1->2 cloner as a closed-form
  3-mode matrix (mode order: clone a, ancilla b, signal c).  gamma tunes the
  noise split between the two clones; gamma = 0 is the symmetric machine.
* ``asym_factorized(gamma)`` -- the same machine assembled from hardware:
  beam splitter BS1(u) on (a, c), a NOPA(v) on (c, b), beam splitter
  BS2(w) on (a, c), with the three angles given by ``asym_params``.  It is a
  Mach-Zehnder interferometer with an amplifier in one arm.
* ``sym_1_to_m`` / ``sym_n_to_m`` -- symmetric machines: collect N identical
  inputs into one mode, amplify by sqrt(M/N) in a single NOPA, and split the
  result evenly over M output modes.

Mode ordering for the symmetric machines: N signal modes, then the NOPA
idler, then the M-1 distribution ancillas.  The M clones come out on the
collected mode plus the ancilla modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .elements import beam_splitter, collect_chain, distribute_chain, nopa
from .gaussian import BogoliubovTransform, ModeLabel, compose, embed

GAMMA_LIMIT = 20.0


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not math.isfinite(gamma):
        raise ValueError(f"gamma must be finite, got {gamma}")
    if abs(gamma) > GAMMA_LIMIT:
        raise ValueError(f"|gamma| > {GAMMA_LIMIT} exceeds the supported range")
    return gamma


@dataclass(frozen=True)
class AsymSpec:
    """Asymmetric 1->2 machine with noise-split parameter gamma."""

    gamma: float
    factorized: bool = False  # build from BS/NOPA/BS instead of the closed form

    def __post_init__(self) -> None:
        _check_gamma(self.gamma)


@dataclass(frozen=True)
class SymSpec:
    """Symmetric N->M machine (N input copies, M output clones)."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")
        if self.m < self.n:
            raise ValueError(f"need m >= n, got n={self.n}, m={self.m}")


ClonerSpec = AsymSpec | SymSpec


@dataclass(frozen=True)
class FactorizationParams:
    """Angles of the BS1 / NOPA / BS2 decomposition of the asymmetric cloner."""

    u: float  # first beam splitter, in [-pi/2, pi/2]
    v: float  # NOPA squeeze parameter, >= 0
    w: float  # second beam splitter, in [0, pi/2]


@dataclass(frozen=True)
class CloningMachine:
    """A built cloner plus the mode bookkeeping needed to read out clones."""

    spec: ClonerSpec
    transform: BogoliubovTransform
    signal_modes: tuple[ModeLabel, ...]
    idler_mode: ModeLabel
    clone_modes: tuple[ModeLabel, ...]
    anticlone_mode: ModeLabel

    @property
    def n_modes(self) -> int:
        return self.transform.n_modes

    def input_amplitudes(self, xi: complex) -> list[complex]:
        """Coherent amplitude per mode: xi on every signal input, vacuum elsewhere."""
        amps = [0j] * self.n_modes
        for m in self.signal_modes:
            amps[m.index] = complex(xi)
        return amps


def asym_direct(gamma: float) -> BogoliubovTransform:
    """Asymmetric 1->2 cloner as an explicit 3-mode matrix (modes a, b, c).

    Both clone rows carry the signal c with coefficient exactly 1; the added
    noise lands on clone a as exp(2 gamma)/2 chaotic photons and on clone c
    as exp(-2 gamma)/2, so the noise product stays at the 1/4 floor.
    """
    g = _check_gamma(gamma)
    ep = np.exp(g) / np.sqrt(2.0)
    em = np.exp(-g) / np.sqrt(2.0)
    A = np.array([
        [ep, 0.0, 1.0],
        [0.0, np.sqrt(2.0) * np.cosh(g), 0.0],
        [-em, 0.0, 1.0],
    ], dtype=complex)
    B = np.array([
        [0.0, -ep, 0.0],
        [-np.sqrt(2.0) * np.sinh(g), 0.0, -1.0],
        [0.0, -em, 0.0],
    ], dtype=complex)
    return BogoliubovTransform(A=A, B=B)


def asym_params(gamma: float) -> FactorizationParams:
    """Angles (u, v, w) that factor the asymmetric cloner into BS/NOPA/BS.

        w = arctan(exp(2 gamma))
        v = artanh( sqrt(1 + exp(4 gamma)) / (1 + exp(2 gamma)) )
        u = -arctan(sqrt(2) sinh(gamma))

    v is evaluated through 0.5*log(((1+s) + sqrt(1+s^2))^2 / (2 s)) with
    s = exp(2 gamma), which is the same function but keeps precision where
    the artanh argument rounds to 1.
    """
    g = _check_gamma(gamma)
    s = np.exp(2.0 * g)
    w = math.atan(s)
    u = -math.atan(math.sqrt(2.0) * math.sinh(g))
    root = math.sqrt(1.0 + s * s)
    v = 0.5 * math.log((1.0 + s + root) ** 2 / (2.0 * s))
    return FactorizationParams(u=u, v=v, w=w)


def asym_factorized(gamma: float) -> BogoliubovTransform:
    """Asymmetric 1->2 cloner assembled from two beam splitters and one NOPA.

    Physical order: BS1(u) mixes (a, c), the NOPA(v) squeezes (c, b), BS2(w)
    recombines (a, c).  Equals ``asym_direct(gamma)`` elementwise.
    """
    p = asym_params(gamma)
    bs1 = embed(beam_splitter(p.u), [0, 2], 3)   # (a, c)
    amp = embed(nopa(p.v), [2, 1], 3)            # (c, b)
    bs2 = embed(beam_splitter(p.w), [0, 2], 3)   # (a, c)
    return compose(bs2, compose(amp, bs1))


def sym_1_to_m(M: int) -> BogoliubovTransform:
    """Symmetric 1->M cloner on M+1 modes (signal, idler, M-1 ancillas)."""
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    total = M + 1
    amp = embed(nopa(math.acosh(math.sqrt(M))), [0, 1], total)
    split = distribute_chain(M, [0] + list(range(2, total)))
    if split.n_modes < total:
        split = embed(split, list(range(split.n_modes)), total)
    return compose(split, amp)


def sym_n_to_m(N: int, M: int) -> BogoliubovTransform:
    """Symmetric N->M cloner on N+M modes.

    collect_chain(N) concentrates the N copies, one NOPA amplifies the
    collected mode by sqrt(M/N) against the idler (mode N), and
    distribute_chain(M) splits it over the collected mode plus M-1 ancillas.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if M < N:
        raise ValueError(f"need M >= N, got N={N}, M={M}")
    total = N + M
    gather = embed(collect_chain(N), list(range(N)), total)
    amp = embed(nopa(math.acosh(math.sqrt(M / N))), [0, N], total)
    split = distribute_chain(M, [0] + list(range(N + 1, total)))
    if split.n_modes < total:
        split = embed(split, list(range(split.n_modes)), total)
    return compose(split, compose(amp, gather))


def build_cloner(spec: ClonerSpec) -> CloningMachine:
    """Build the machine a spec describes, with labeled signal/clone modes."""
    if isinstance(spec, AsymSpec):
        t = asym_factorized(spec.gamma) if spec.factorized else asym_direct(spec.gamma)
        return CloningMachine(
            spec=spec,
            transform=t,
            signal_modes=(ModeLabel(2, "in"),),
            idler_mode=ModeLabel(1, "idler"),
            clone_modes=(ModeLabel(0, "clone_1"), ModeLabel(2, "clone_2")),
            anticlone_mode=ModeLabel(1, "anticlone"),
        )
    if isinstance(spec, SymSpec):
        N, M = spec.n, spec.m
        t = sym_n_to_m(N, M)
        signals = tuple(ModeLabel(k, f"in_{k + 1}") for k in range(N))
        clone_wires = [0] + list(range(N + 1, N + M))
        clones = tuple(
            ModeLabel(w, f"clone_{j + 1}") for j, w in enumerate(sorted(clone_wires))
        )
        return CloningMachine(
            spec=spec,
            transform=t,
            signal_modes=signals,
            idler_mode=ModeLabel(N, "idler"),
            clone_modes=clones,
            anticlone_mode=ModeLabel(N, "anticlone"),
        )
    raise TypeError(f"unknown cloner spec: {spec!r}")
