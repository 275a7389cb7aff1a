"""Linear bosonic-mode transformations and Gaussian states.

A circuit element acting on n modes is stored in the Heisenberg picture as a
pair of complex matrices (A, B) with

    a_out[j] = sum_k A[j, k] a[k] + B[j, k] a[k]^dag .

Preservation of the commutation relations requires

    A A^dag - B B^dag = I     and     A B^T = B A^T ,

which :func:`check_symplectic` measures and everything downstream relies on.

Quadrature conventions (hbar = 1):

    x = (a + a^dag)/sqrt(2),   p = (a - a^dag)/(i sqrt(2)),

so the vacuum variance is 1/2 and a coherent amplitude xi has mean
(sqrt(2) Re xi, sqrt(2) Im xi).  Quadratures are ordered interleaved,
(x1, p1, x2, p2, ...), which keeps single-mode reduction a contiguous
2x2 block.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

DEFAULT_TOL = 1e-10


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class ModeLabel:
    """A mode position with an optional human-readable tag."""

    index: int
    name: str = ""

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"mode index must be >= 0, got {self.index}")


def mode_index(mode: int | ModeLabel) -> int:
    return mode.index if isinstance(mode, ModeLabel) else int(mode)


@dataclass(frozen=True)
class BogoliubovTransform:
    """Heisenberg-picture linear mode map a_out = A a + B a^dag."""

    A: NDArray[np.complex128]
    B: NDArray[np.complex128]

    def __post_init__(self) -> None:
        A = np.array(self.A, dtype=complex)
        B = np.array(self.B, dtype=complex)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"A must be square, got shape {A.shape}")
        if B.shape != A.shape:
            raise ValueError(f"A and B shapes differ: {A.shape} vs {B.shape}")
        object.__setattr__(self, "A", _readonly(A))
        object.__setattr__(self, "B", _readonly(B))

    @property
    def n_modes(self) -> int:
        return self.A.shape[0]

    def symplectic_matrix(self) -> NDArray[np.float64]:
        """Real 2n x 2n quadrature matrix S with r_out = S r_in.

        Built as [[Re(A+B), -Im(A-B)], [Im(A+B), Re(A-B)]] in xxpp block
        ordering and permuted to the interleaved convention.  S Omega S^T =
        Omega holds exactly when (A, B) satisfy the commutation constraints;
        that property is enforced by tests rather than assumed here.
        """
        A, B = self.A, self.B
        n = self.n_modes
        blocks = np.block([
            [(A + B).real, -(A - B).imag],
            [(A + B).imag, (A - B).real],
        ])
        perm = np.arange(2 * n).reshape(2, n).T.reshape(-1)  # xxpp -> interleaved
        return blocks[np.ix_(perm, perm)]


@dataclass(frozen=True)
class GaussianState:
    """Gaussian state of n modes: quadrature mean vector and covariance matrix."""

    mean: NDArray[np.float64]
    cov: NDArray[np.float64]

    def __post_init__(self) -> None:
        mean = np.array(self.mean, dtype=float)
        cov = np.array(self.cov, dtype=float)
        if mean.ndim != 1 or mean.size % 2 != 0 or mean.size == 0:
            raise ValueError(f"mean must have even positive length, got {mean.shape}")
        if cov.shape != (mean.size, mean.size):
            raise ValueError(f"cov shape {cov.shape} does not match mean length {mean.size}")
        if np.abs(cov - cov.T).max() > 1e-8:
            raise ValueError("covariance matrix is not symmetric")
        object.__setattr__(self, "mean", _readonly(mean))
        object.__setattr__(self, "cov", _readonly(cov))

    @property
    def n_modes(self) -> int:
        return self.mean.size // 2

    def mode_amplitude(self, mode: int | ModeLabel) -> complex:
        """Coherent amplitude (x + i p)/sqrt(2) carried by one mode's mean."""
        k = mode_index(mode)
        return complex(self.mean[2 * k] + 1j * self.mean[2 * k + 1]) / np.sqrt(2.0)


@dataclass(frozen=True)
class SymplecticCheck:
    """Deviations of the two commutation-preservation constraints."""

    commutation_dev: float  # max |A A^dag - B B^dag - I|
    symmetry_dev: float     # max |A B^T - B A^T|
    tol: float = DEFAULT_TOL

    @property
    def max_dev(self) -> float:
        return max(self.commutation_dev, self.symmetry_dev)

    @property
    def passed(self) -> bool:
        return self.max_dev <= self.tol


def symplectic_form(n_modes: int) -> NDArray[np.float64]:
    """Interleaved symplectic form Omega, [r_j, r_k] = i Omega_jk."""
    return np.kron(np.eye(n_modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def identity_transform(n_modes: int) -> BogoliubovTransform:
    """Do-nothing transform on n_modes modes."""
    if n_modes < 1:
        raise ValueError(f"n_modes must be >= 1, got {n_modes}")
    n = int(n_modes)
    return BogoliubovTransform(A=np.eye(n, dtype=complex), B=np.zeros((n, n), dtype=complex))


def compose(second: BogoliubovTransform, first: BogoliubovTransform) -> BogoliubovTransform:
    """Transform equivalent to applying `first` and then `second`.

    Substituting first's input-output relations into second's gives
    A = A2 A1 + B2 conj(B1) and B = A2 B1 + B2 conj(A1).
    """
    if second.n_modes != first.n_modes:
        raise ValueError(
            f"mode count mismatch: {second.n_modes} vs {first.n_modes}"
        )
    A2, B2 = second.A, second.B
    A1, B1 = first.A, first.B
    return BogoliubovTransform(
        A=A2 @ A1 + B2 @ B1.conj(),
        B=A2 @ B1 + B2 @ A1.conj(),
    )


def embed(
    t: BogoliubovTransform,
    targets: list[int | ModeLabel] | tuple[int | ModeLabel, ...],
    total: int,
) -> BogoliubovTransform:
    """Place `t` on the listed modes of a `total`-mode register, identity elsewhere."""
    idx = [mode_index(m) for m in targets]
    if len(idx) != t.n_modes:
        raise ValueError(f"expected {t.n_modes} target modes, got {len(idx)}")
    if len(set(idx)) != len(idx):
        raise ValueError(f"duplicate target modes: {idx}")
    if any(k < 0 or k >= total for k in idx):
        raise ValueError(f"target modes {idx} out of range for total={total}")
    A = np.eye(total, dtype=complex)
    B = np.zeros((total, total), dtype=complex)
    A[np.ix_(idx, idx)] = t.A
    B[np.ix_(idx, idx)] = t.B
    return BogoliubovTransform(A=A, B=B)


def check_symplectic(t: BogoliubovTransform, tol: float = DEFAULT_TOL) -> SymplecticCheck:
    """Measure how far (A, B) sits from a valid Bogoliubov transform."""
    A, B = t.A, t.B
    eye = np.eye(t.n_modes)
    commutation = np.abs(A @ A.conj().T - B @ B.conj().T - eye).max()
    symmetry = np.abs(A @ B.T - B @ A.T).max()
    return SymplecticCheck(commutation_dev=float(commutation), symmetry_dev=float(symmetry), tol=tol)


def coherent_vacuum_input(amplitudes: list[complex] | tuple[complex, ...]) -> GaussianState:
    """Product of coherent states (vacuum where the amplitude is zero)."""
    if len(amplitudes) == 0:
        raise ValueError("need at least one mode")
    n = len(amplitudes)
    mean = np.zeros(2 * n)
    for k, xi in enumerate(amplitudes):
        xi = complex(xi)
        mean[2 * k] = np.sqrt(2.0) * xi.real
        mean[2 * k + 1] = np.sqrt(2.0) * xi.imag
    return GaussianState(mean=mean, cov=0.5 * np.eye(2 * n))


def apply_to_gaussian(
    t: BogoliubovTransform,
    s: GaussianState,
    tol: float = DEFAULT_TOL,
) -> GaussianState:
    """Evolve a Gaussian state: mean -> S mean, cov -> S cov S^T."""
    if t.n_modes != s.n_modes:
        raise ValueError(f"mode count mismatch: transform {t.n_modes}, state {s.n_modes}")
    diag = check_symplectic(t, tol)
    if not diag.passed:
        raise ValueError(
            f"transform is not symplectic within tol={tol}: "
            f"commutation dev {diag.commutation_dev:.3e}, symmetry dev {diag.symmetry_dev:.3e}"
        )
    S = t.symplectic_matrix()
    return GaussianState(mean=S @ s.mean, cov=S @ s.cov @ S.T)


def reduce_mode(s: GaussianState, mode: int | ModeLabel) -> GaussianState:
    """Single-mode marginal (Gaussian partial trace over the other modes)."""
    k = mode_index(mode)
    if k >= s.n_modes:
        raise ValueError(f"mode {k} out of range for {s.n_modes}-mode state")
    sl = slice(2 * k, 2 * k + 2)
    return GaussianState(mean=s.mean[sl].copy(), cov=s.cov[sl, sl].copy())


def uncertainty_defect(s: GaussianState) -> float:
    """How far cov + (i/2) Omega is from positive semidefinite (0 if valid).

    Returns max(0, -lambda_min); a physical state keeps this at numerical zero.
    """
    omega = symplectic_form(s.n_modes)
    eigs = np.linalg.eigvalsh(s.cov + 0.5j * omega)
    return float(max(0.0, -eigs.min()))


def total_photons(s: GaussianState) -> float:
    """Mean total photon number sum_k <a_k^dag a_k>."""
    n = s.n_modes
    return float((np.trace(s.cov) - n) / 2.0 + s.mean @ s.mean / 2.0)
