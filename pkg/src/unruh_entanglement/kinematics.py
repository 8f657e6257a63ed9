"""Map physical scenario parameters to the squeezing parameter r.

A uniformly accelerated detector sees the inertial vacuum of a single field
mode as a two-mode squeezed state across the two Rindler wedges.  The
squeezing strength is fixed by the dimensionless combination
Omega = |k| c / a through

    cosh r = (1 - exp(-2 pi Omega))**(-1/2),

equivalently (and this is the numerically stable form used here)

    tanh r = exp(-pi Omega).

Everything downstream of this module depends on r alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

LN2 = math.log(2.0)

# Below this Omega the acceleration is treated as effectively infinite:
# the direct series evaluation of the measures can no longer reach default
# tolerances in double precision and callers switch to limit brackets.
OMEGA_EFFECTIVELY_INFINITE = 1e-8

# r at the Omega threshold above; squeezings beyond this carry the flag too.
_R_EFFECTIVELY_INFINITE = 0.5 * (
    math.log1p(math.exp(-math.pi * OMEGA_EFFECTIVELY_INFINITE))
    - math.log(-math.expm1(-math.pi * OMEGA_EFFECTIVELY_INFINITE))
)


def _require_finite_positive(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} must be finite and > 0, got {value!r}")
    return value


@dataclass(frozen=True)
class ModeSpec:
    """Physical inputs: mode frequency |k|, proper acceleration a, signal speed c.

    Units may be anything mutually consistent (geometric c = 1 by default);
    only the ratio Omega = freq_k * speed_c / accel_a matters.
    """

    freq_k: float
    accel_a: float
    speed_c: float = 1.0

    def __post_init__(self) -> None:
        _require_finite_positive(self.freq_k, "freq_k")
        _require_finite_positive(self.accel_a, "accel_a")
        _require_finite_positive(self.speed_c, "speed_c")
        omega = self.omega
        if not math.isfinite(omega) or omega <= 0.0:
            raise ValueError(f"Omega = {omega!r} out of range for {self!r}")

    @property
    def omega(self) -> float:
        return self.freq_k * self.speed_c / self.accel_a


@dataclass(frozen=True)
class SqueezingParameter:
    """Acceleration-induced squeezing r >= 0 with overflow-safe caches.

    ``ln_cosh_r`` and ``ln_tanh_r`` stay accurate where ``cosh_r`` overflows
    or ``tanh_r`` rounds to 1.  ``effectively_infinite`` marks squeezings
    past the Omega < 1e-8 regime where only limit brackets are meaningful.
    """

    r: float
    tanh_r: float = field(repr=False, default=-1.0)
    cosh_r: float = field(repr=False, default=-1.0)
    ln_cosh_r: float = field(repr=False, default=0.0)
    ln_tanh_r: float = field(repr=False, default=0.0)
    effectively_infinite: bool = False

    def __post_init__(self) -> None:
        if not math.isfinite(self.r) or self.r < 0.0:
            raise ValueError(f"squeezing parameter must be finite and >= 0, got {self.r!r}")
        if self.tanh_r < 0.0:  # caches not supplied: derive from r
            object.__setattr__(self, "tanh_r", math.tanh(self.r))
            object.__setattr__(self, "cosh_r", _safe_cosh(self.r))
            object.__setattr__(self, "ln_cosh_r", _ln_cosh(self.r))
            object.__setattr__(self, "ln_tanh_r", _ln_tanh(self.r))
            object.__setattr__(
                self, "effectively_infinite", self.r > _R_EFFECTIVELY_INFINITE
            )
        self._check_caches()

    def _check_caches(self) -> None:
        if not math.isfinite(self.cosh_r):
            return  # identity unverifiable past overflow; ln-space caches rule
        c2 = self.cosh_r * self.cosh_r
        sinh2 = c2 * self.tanh_r * self.tanh_r
        if abs(c2 - sinh2 - 1.0) >= 1e-12 * c2:
            raise ValueError(f"inconsistent hyperbolic caches for r = {self.r!r}")

    @classmethod
    def from_r(cls, r: float) -> "SqueezingParameter":
        return cls(float(r))

    @property
    def tanh_sq(self) -> float:
        """tanh^2 r, the geometric ratio of every series in the model."""
        return self.tanh_r * self.tanh_r

    @property
    def cosh_sq(self) -> float:
        return self.cosh_r * self.cosh_r

    @property
    def sinh_sq(self) -> float:
        return self.cosh_sq - 1.0


def _safe_cosh(r: float) -> float:
    try:
        return math.cosh(r)
    except OverflowError:
        return math.inf


def _ln_cosh(r: float) -> float:
    if r < 20.0:
        return math.log(math.cosh(r))
    return r - LN2 + math.log1p(math.exp(-2.0 * r))


def _ln_tanh(r: float) -> float:
    # ln tanh r = log1p(-2 / (e^{2r} + 1)); exact down to the last ulp for
    # large r where tanh r itself rounds to 1.
    if r == 0.0:
        return -math.inf
    if 2.0 * r > 700.0:
        return -2.0 * math.exp(-2.0 * r)  # underflows to -0.0 gracefully
    return math.log1p(-2.0 / (math.exp(2.0 * r) + 1.0))


def squeezing_from_omega(omega: float) -> SqueezingParameter:
    """Squeezing for a dimensionless mode/acceleration ratio Omega.

    Uses tanh r = exp(-pi Omega) exactly, so the map is stable over the full
    double range: r -> 0 as Omega -> infinity and r grows like
    -(1/2) ln Omega as Omega -> 0+ (never overflowing).
    """
    omega = _require_finite_positive(omega, "omega")
    t = math.exp(-math.pi * omega)           # tanh r
    one_minus_t2 = -math.expm1(-2.0 * math.pi * omega)   # 1/cosh^2 r, exact
    r = 0.5 * (math.log1p(t) - math.log(-math.expm1(-math.pi * omega)))
    return SqueezingParameter(
        r=r,
        tanh_r=t,
        cosh_r=1.0 / math.sqrt(one_minus_t2),
        ln_cosh_r=-0.5 * math.log(one_minus_t2),
        ln_tanh_r=-math.pi * omega,
        effectively_infinite=omega < OMEGA_EFFECTIVELY_INFINITE,
    )


def squeezing_from_mode(spec: ModeSpec) -> SqueezingParameter:
    """Squeezing seen by a detector of mode |k| under proper acceleration a."""
    return squeezing_from_omega(spec.omega)


@dataclass(frozen=True)
class NearHorizonSpec:
    """Near-horizon geometry of a static black hole of mass m (geometric units).

    ``coord_x`` is the proper-distance-like coordinate in which the metric
    takes the uniformly-accelerated form -(A x)^2 dT^2 + dx^2 close to the
    horizon, with A = 1/(4m).  Validity requires (A x)^2 << 1.
    """

    mass_m: float
    coord_x: float

    def __post_init__(self) -> None:
        _require_finite_positive(self.mass_m, "mass_m")
        _require_finite_positive(self.coord_x, "coord_x")


@dataclass(frozen=True)
class NearHorizonResult:
    """Literal transcription of the near-horizon acceleration assignment.

    ``accel_param`` is the assignment a = A^(-1) = 4m taken at face value.
    Note the competing reading: a static observer in the metric
    -(A x)^2 dT^2 + dx^2 has local proper acceleration 1/x, not 4m; this
    result deliberately reports the literal assignment and leaves the
    interpretation to the caller, alongside the small-(Ax)^2 validity check.
    """

    surface_gravity: float      # A = 1/(4m)
    accel_param: float          # a = A^(-1) = 4m, literal assignment
    validity_indicator: float   # (A x)^2, must be << 1 for the approximation


def near_horizon_accel(spec: NearHorizonSpec) -> NearHorizonResult:
    """Near-horizon acceleration parameter a = 4m and its validity indicator."""
    surface_gravity = 1.0 / (4.0 * spec.mass_m)
    return NearHorizonResult(
        surface_gravity=surface_gravity,
        accel_param=4.0 * spec.mass_m,
        validity_indicator=(surface_gravity * spec.coord_x) ** 2,
    )


def as_squeezing(value: "SqueezingParameter | float") -> SqueezingParameter:
    """Coerce a plain r into a SqueezingParameter; pass instances through."""
    if isinstance(value, SqueezingParameter):
        return value
    return SqueezingParameter.from_r(value)
