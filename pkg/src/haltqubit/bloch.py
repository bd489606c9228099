"""Single-qubit Bloch kernel.

A pure state is a unit 3-vector mu on the Bloch sphere, an observable is a
unit 3-vector nu, and the two meet either as the density matrix
rho = (I + mu . sigma) / 2 or as the measurement operator nu . sigma.
Unitaries act by conjugation in the 2x2 complex representation: states
evolve as U rho U^dagger, observables as U^dagger M U.

Tolerances: inputs must be unit to 1e-6, outputs are unit to 1e-9 (larger
drift raises, it signals a bug rather than float noise), matrix identities
hold to 1e-12. Vectors are renormalized only when drift exceeds 1e-12.
All functions are pure; values are immutable and safe to share across
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

INPUT_NORM_TOL = 1e-6
OUTPUT_NORM_TOL = 1e-9
MATRIX_TOL = 1e-12
RENORM_EPS = 1e-12

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY2 = np.eye(2, dtype=complex)
for _m in (SIGMA_X, SIGMA_Y, SIGMA_Z, IDENTITY2):
    _m.setflags(write=False)


class ValidationError(ValueError):
    """Raised for non-unit, non-finite, or otherwise malformed inputs."""


def _unit3(x: float, y: float, z: float, tol: float, what: str) -> tuple[float, float, float]:
    # validate + renormalize; drift <= 1e-12 is kept bit-for-bit
    if not all(math.isfinite(c) for c in (x, y, z)):
        raise ValidationError(f"{what} has non-finite components: ({x}, {y}, {z})")
    norm = math.sqrt(x * x + y * y + z * z)
    if abs(norm - 1.0) > tol:
        raise ValidationError(f"{what} must be unit length, got norm {norm!r}")
    if abs(norm - 1.0) > RENORM_EPS:
        return x / norm, y / norm, z / norm
    return x, y, z


@dataclass(frozen=True)
class _UnitVector3:
    """Unit 3-vector; construction validates at the input tolerance."""

    x: float
    y: float
    z: float

    _norm_tol = INPUT_NORM_TOL

    def __post_init__(self) -> None:
        x, y, z = _unit3(float(self.x), float(self.y), float(self.z),
                         self._norm_tol, type(self).__name__)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @classmethod
    def from_angles(cls, theta: float, phi: float):
        """Build from polar angle theta and azimuth phi."""
        return cls(math.sin(theta) * math.cos(phi),
                   math.sin(theta) * math.sin(phi),
                   math.cos(theta))

    @property
    def components(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


class BlochVector(_UnitVector3):
    """Pure qubit state as a point on the Bloch sphere."""


class Observable(_UnitVector3):
    """Measurement direction; its operator is nu . sigma."""


def _check_2x2(matrix: np.ndarray, what: str) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (2, 2):
        raise ValidationError(f"{what} must be 2x2, got shape {m.shape}")
    if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        raise ValidationError(f"{what} has non-finite entries")
    m = m.copy()
    m.setflags(write=False)
    return m


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """2x2 Hermitian trace-one matrix; pure when built from a BlochVector."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = _check_2x2(self.matrix, "density matrix")
        if abs(m[1, 0] - np.conj(m[0, 1])) > MATRIX_TOL or \
           abs(m[0, 0].imag) > MATRIX_TOL or abs(m[1, 1].imag) > MATRIX_TOL:
            raise ValidationError("density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > MATRIX_TOL:
            raise ValidationError(f"density matrix trace must be 1, got {np.trace(m)!r}")
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True, eq=False)
class Unitary2:
    """2x2 unitary; U U^dagger = I entrywise to 1e-12."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = _check_2x2(self.matrix, "unitary")
        if not np.allclose(m @ m.conj().T, IDENTITY2, rtol=0.0, atol=MATRIX_TOL):
            raise ValidationError("matrix is not unitary within 1e-12")
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class RotationSpec:
    """Axis-angle rotation: unit axis and a finite angle in radians."""

    axis: tuple[float, float, float]
    angle: float

    def __post_init__(self) -> None:
        ax = _unit3(*(float(c) for c in self.axis), INPUT_NORM_TOL, "rotation axis")
        if not math.isfinite(self.angle):
            raise ValidationError(f"rotation angle must be finite, got {self.angle!r}")
        object.__setattr__(self, "axis", ax)
        object.__setattr__(self, "angle", float(self.angle))


def bloch_to_density(mu: BlochVector) -> DensityMatrix:
    """Density matrix (I + mu . sigma) / 2 of a pure state."""
    m = 0.5 * (IDENTITY2 + mu.x * SIGMA_X + mu.y * SIGMA_Y + mu.z * SIGMA_Z)
    return DensityMatrix(m)

def density_to_bloch(rho: DensityMatrix) -> BlochVector:
    """Bloch components mu_i = Re tr(rho sigma_i); rejects non-pure input."""
    m = rho.matrix
    purity = np.trace(m @ m).real
    if abs(purity - 1.0) > OUTPUT_NORM_TOL:
        raise ValidationError(f"density matrix is not pure, tr(rho^2) = {purity!r}")
    comps = tuple(np.trace(m @ s).real for s in (SIGMA_X, SIGMA_Y, SIGMA_Z))
    return BlochVector(*_unit3(*comps, OUTPUT_NORM_TOL, "extracted Bloch vector"))

def rotation_y(delta: float) -> Unitary2:
    """Rotation about the y axis by delta: [[cos d/2, -sin d/2], [sin d/2, cos d/2]]."""
    if not math.isfinite(delta):
        raise ValidationError(f"rotation angle must be finite, got {delta!r}")
    c, s = math.cos(delta / 2.0), math.sin(delta / 2.0)
    return Unitary2(np.array([[c, -s], [s, c]], dtype=complex))

def axis_rotation(spec: RotationSpec) -> Unitary2:
    """General rotation cos(a/2) I - i sin(a/2) (axis . sigma)."""
    nx, ny, nz = spec.axis
    c, s = math.cos(spec.angle / 2.0), math.sin(spec.angle / 2.0)
    m = c * IDENTITY2 - 1j * s * (nx * SIGMA_X + ny * SIGMA_Y + nz * SIGMA_Z)
    return Unitary2(m)

def evolve_schrodinger(mu: BlochVector, u: Unitary2) -> BlochVector:
    """State picture: conjugate the density matrix, U rho U^dagger."""
    rho = bloch_to_density(mu)
    evolved = u.matrix @ rho.matrix @ u.matrix.conj().T
    return density_to_bloch(DensityMatrix(evolved))

def evolve_heisenberg(nu: Observable, u: Unitary2) -> Observable:
    """Observable picture: conjugate nu . sigma the opposite way, U^dagger M U."""
    m = nu.x * SIGMA_X + nu.y * SIGMA_Y + nu.z * SIGMA_Z
    evolved = u.matrix.conj().T @ m @ u.matrix
    comps = tuple(0.5 * np.trace(evolved @ s).real for s in (SIGMA_X, SIGMA_Y, SIGMA_Z))
    return Observable(*_unit3(*comps, OUTPUT_NORM_TOL, "evolved observable"))

def expectation(nu: Observable, mu: BlochVector) -> float:
    """Expected measurement value nu . mu, clamped to [-1, 1]."""
    value = nu.x * mu.x + nu.y * mu.y + nu.z * mu.z
    return min(1.0, max(-1.0, value))


def vector_json(v: _UnitVector3 | tuple[float, float, float]) -> list[float]:
    """3-vector as a JSON-ready list."""
    if isinstance(v, _UnitVector3):
        return [v.x, v.y, v.z]
    return [float(c) for c in v]

def matrix_json(m: np.ndarray) -> list[list[list[float]]]:
    """2x2 complex matrix as row-major [re, im] pairs."""
    a = np.asarray(m, dtype=complex)
    return [[[c.real, c.imag] for c in row] for row in a]
