"""Independent truncated-Fock-space oracle for the 1->2 cloner.

Everything else in this package manipulates (A, B) coefficient matrices and
Gaussian moments.  This module never touches those: it builds the cloning
unitary directly in a photon-number basis with a hard cutoff,

    C = exp(-i (U_mix + V_sq)) * exp(-i chi Y_sq),    chi = gamma + ln(2)/2,

where U_mix mixes the signal into the first clone mode, V_sq is a two-mode
squeeze of the signal against the idler, and Y_sq pre-squeezes clone against
idler.  Evolving exact state vectors and tracing out modes gives clone
fidelities with no Gaussian assumptions, so agreement with the covariance
pipeline checks both sides.

Numerical core: each generator is i times a real antisymmetric matrix in the
number basis, so every factor of C is a real orthogonal matrix.  Truncation
therefore never breaks unitarity; it only leaks population into the top Fock
levels, which is measured and gated rather than ignored.

Scope: three modes (or two for squeezer sanity checks).  The N->M machines
live in spaces of dimension (cutoff+1)^(N+M) and are out of reach here by
design; the Gaussian invariants cover them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.sparse as sp
from numpy.typing import NDArray
from scipy.linalg import expm
from scipy.sparse.linalg import expm_multiply

from .gaussian import ModeLabel, mode_index

DIMENSION_BUDGET = 200_000
LEAKAGE_TOL = 1e-2
COHERENT_NORM_TOL = 1e-6


class TruncationError(RuntimeError):
    """Raised when too much population reaches the truncation boundary."""


@dataclass(frozen=True)
class FockSpace:
    """A register of modes, each truncated at `cutoff` photons."""

    n_modes: int
    cutoff: int
    budget: int = DIMENSION_BUDGET

    def __post_init__(self) -> None:
        if self.n_modes < 1:
            raise ValueError(f"need at least one mode, got {self.n_modes}")
        if self.cutoff < 1:
            raise ValueError(f"cutoff must be >= 1, got {self.cutoff}")
        if self.dim > self.budget:
            raise ValueError(
                f"dimension {self.dim} exceeds the budget of {self.budget}"
            )

    @property
    def levels(self) -> int:
        return self.cutoff + 1

    @property
    def dim(self) -> int:
        return self.levels ** self.n_modes


@dataclass(frozen=True)
class FockState:
    """State vector over the truncated number basis (mode 0 varies slowest)."""

    space: FockSpace
    amplitudes: NDArray[np.complex128]

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.space.dim,):
            raise ValueError(
                f"amplitude vector has shape {amps.shape}, expected ({self.space.dim},)"
            )
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def top_level_population(self, mode: int | ModeLabel) -> float:
        """Population sitting at the truncation boundary of one mode."""
        return float(photon_distribution(self, mode)[-1])


def _ladder(levels: int) -> np.ndarray:
    a = np.zeros((levels, levels))
    ns = np.arange(1, levels)
    a[ns - 1, ns] = np.sqrt(ns)
    return a


def _lift(op: np.ndarray, mode: int, space: FockSpace) -> sp.csr_matrix:
    # kron ordering matches the amplitude layout: mode 0 is the slowest index
    out = sp.identity(1, format="csr")
    for m in range(space.n_modes):
        block = op if m == mode else sp.identity(space.levels, format="csr")
        out = sp.kron(out, block, format="csr")
    return out


def _mix_flow(space: FockSpace, pair: tuple[int, int]) -> sp.csr_matrix:
    """Real antisymmetric K with exp(theta K) acting as a beam splitter on `pair`."""
    m1, m2 = pair
    a = sp.csr_matrix(_ladder(space.levels))
    a1, a2 = _lift(a, m1, space), _lift(a, m2, space)
    return (a1.T @ a2 - a2.T @ a1).tocsr()


def _squeeze_flow(space: FockSpace, pair: tuple[int, int]) -> sp.csr_matrix:
    """Real antisymmetric K with exp(r K) acting as a NOPA on `pair`."""
    m1, m2 = pair
    a = sp.csr_matrix(_ladder(space.levels))
    a1, a2 = _lift(a, m1, space), _lift(a, m2, space)
    return (a1 @ a2 - a1.T @ a2.T).tocsr()


def mixing_generator(space: FockSpace, pair: tuple[int, int]) -> np.ndarray:
    """Hermitian generator G with exp(-i theta G) = beam splitter on `pair`.

    For pair (p, q) this is i(a_p^dag a_q - a_q^dag a_p) in the truncated
    number basis.
    """
    return 1j * _mix_flow(space, pair).toarray()


def squeezing_generator(space: FockSpace, pair: tuple[int, int]) -> np.ndarray:
    """Hermitian generator G with exp(-i r G) = NOPA on `pair`.

    For pair (p, q) this is i(a_p a_q - a_p^dag a_q^dag).  Truncation clips
    the coupling to the top level symmetrically, so G stays exactly Hermitian.
    """
    return 1j * _squeeze_flow(space, pair).toarray()


# Wiring of the 1->2 cloner in this module: mode 0 = clone a, mode 1 = idler b,
# mode 2 = signal c.  The gamma-independent factor exp(-i(U+V)) mixes (0, 2)
# and squeezes (2, 1); the gamma-dependent factor squeezes (0, 1).
_CLONE, _IDLER, _SIGNAL = 0, 1, 2


def _cloner_space(space: FockSpace) -> FockSpace:
    if space.n_modes != 3:
        raise ValueError(f"the cloner acts on 3 modes, got {space.n_modes}")
    return space


def _fixed_flow(space: FockSpace) -> sp.csr_matrix:
    return (_mix_flow(space, (_CLONE, _SIGNAL))
            + _squeeze_flow(space, (_SIGNAL, _IDLER))).tocsr()


@lru_cache(maxsize=2)
def _fixed_orthogonal(cutoff: int, budget: int) -> np.ndarray:
    space = FockSpace(3, cutoff, budget)
    u = expm(_fixed_flow(space).toarray())
    u.setflags(write=False)
    return u


def cloning_unitary_fock(gamma: float, space: FockSpace) -> np.ndarray:
    """Cloning unitary as a dense matrix, exp(-i(U+V)) exp(-i chi Y).

    Returned as a real array: both factors are exponentials of real
    antisymmetric matrices and hence real orthogonal, even at finite cutoff.
    The gamma-independent left factor is cached per cutoff; the right factor
    only involves the clone and idler modes, so it is exponentiated in their
    two-mode space and Kronecker-lifted.
    """
    _cloner_space(space)
    chi = float(gamma) + 0.5 * math.log(2.0)
    pair_space = FockSpace(2, space.cutoff, space.budget)
    right_small = expm(chi * _squeeze_flow(pair_space, (0, 1)).toarray())
    right = np.kron(right_small, np.eye(space.levels))
    return _fixed_orthogonal(space.cutoff, space.budget) @ right


def apply_cloning_fock(gamma: float, state: FockState) -> FockState:
    """Send a 3-mode state through the cloner without forming the matrix.

    Krylov evaluation of both exponential factors acting on the vector; this
    is the path to use for sweeps, where the dense matrix would dominate the
    cost at larger cutoffs.
    """
    space = _cloner_space(state.space)
    chi = float(gamma) + 0.5 * math.log(2.0)
    v = expm_multiply(chi * _squeeze_flow(space, (_CLONE, _IDLER)),
                      np.asarray(state.amplitudes, dtype=complex))
    v = expm_multiply(_fixed_flow(space), v)
    return FockState(space=space, amplitudes=v)


def coherent_fock(space: FockSpace, amplitudes: list[complex] | tuple[complex, ...]) -> FockState:
    """Product of truncated coherent states, one amplitude per mode.

    Per-mode coefficients are exp(-|xi|^2/2) xi^n / sqrt(n!) with the tail
    above the cutoff simply dropped; the missing norm is the caller's
    truncation-error budget and is checked where it matters.
    """
    if len(amplitudes) != space.n_modes:
        raise ValueError(
            f"got {len(amplitudes)} amplitudes for {space.n_modes} modes"
        )
    vec = np.ones(1, dtype=complex)
    for xi in amplitudes:
        vec = np.kron(vec, _coherent_column(space.levels, complex(xi)))
    return FockState(space=space, amplitudes=vec)


def _coherent_column(levels: int, xi: complex) -> np.ndarray:
    ns = np.arange(levels)
    log_fact = np.cumsum(np.concatenate(([0.0], np.log(np.arange(1, levels)))))
    mags = np.exp(-abs(xi) ** 2 / 2.0 + ns * np.log(abs(xi)) - log_fact / 2.0) \
        if xi != 0 else np.concatenate(([1.0], np.zeros(levels - 1)))
    phases = np.exp(1j * ns * np.angle(xi)) if xi != 0 else np.ones(levels)
    return mags * phases


def reduced_density_matrix(state: FockState, mode: int | ModeLabel) -> np.ndarray:
    """Density matrix of one mode, the rest traced out."""
    m = mode_index(mode)
    space = state.space
    if not 0 <= m < space.n_modes:
        raise ValueError(f"mode {m} out of range for {space.n_modes} modes")
    d = space.levels
    psi = np.asarray(state.amplitudes).reshape((d,) * space.n_modes)
    psi = np.moveaxis(psi, m, 0).reshape(d, -1)
    return psi @ psi.conj().T


def photon_distribution(state: FockState, mode: int | ModeLabel) -> NDArray[np.float64]:
    """Photon-number populations of one mode (diagonal of its density matrix)."""
    return np.real(np.diag(reduced_density_matrix(state, mode)))


def mode_expectation(state: FockState, mode: int | ModeLabel) -> complex:
    """<a_mode> in the current state, for Heisenberg-picture cross-checks."""
    m = mode_index(mode)
    a = _lift(sp.csr_matrix(_ladder(state.space.levels)), m, state.space)
    return complex(np.vdot(state.amplitudes, a @ state.amplitudes))


def fidelity_fock(state: FockState, clone_mode: int | ModeLabel, xi: complex, *,
                  leakage_tol: float = LEAKAGE_TOL) -> float:
    """Overlap <xi| rho_clone |xi> of one output mode with the coherent target.

    Refuses to answer when the truncated |xi> itself is too lossy (norm below
    1 - 1e-6) or when the clone has pushed more than leakage_tol of its
    population onto the top Fock level: a silently truncated fidelity would
    look like a cloning result while actually measuring the box size.
    """
    levels = state.space.levels
    target = _coherent_column(levels, complex(xi))
    norm2 = float(np.vdot(target, target).real)
    if norm2 < 1.0 - COHERENT_NORM_TOL:
        raise TruncationError(
            f"coherent amplitude {xi} keeps only norm^2 = {norm2} below cutoff "
            f"{state.space.cutoff}; raise the cutoff"
        )
    rho = reduced_density_matrix(state, clone_mode)
    leak = float(rho[-1, -1].real)
    if leak > leakage_tol:
        raise TruncationError(
            f"top-level population {leak:.3e} exceeds {leakage_tol}; "
            f"the cutoff is too small for this evolution"
        )
    return float(np.real(np.vdot(target, rho @ target)))


def unitarity_block_deviation(u: np.ndarray, space: FockSpace,
                              max_total_photons: int) -> float:
    """max |(U^dag U - I)| restricted to basis states with few total photons.

    At finite cutoff only the low-photon block of the cloning unitary is
    physically meaningful; this measures how unitary that block is.
    """
    shape = (space.levels,) * space.n_modes
    totals = np.zeros(shape, dtype=int)
    for axis in range(space.n_modes):
        idx = [1] * space.n_modes
        idx[axis] = -1
        totals = totals + np.arange(space.levels).reshape(idx)
    keep = np.flatnonzero(totals.reshape(-1) <= max_total_photons)
    g = u.conj().T @ u
    block = g[np.ix_(keep, keep)] - np.eye(keep.size)
    return float(np.abs(block).max())
