"""Generalised Berger metrics of arbitrary frame signature.

At a point p the metric is

    eps1 lam^2 <p^-1 A, (i,0)><p^-1 B, (i,0)>
  + eps2 mu^2  <p^-1 A, (0,-1)><p^-1 B, (0,-1)>
  + eps3 nu^2  <p^-1 A, (0,i)><p^-1 B, (0,i)>
  +            <p^-1 A, (1,0)><p^-1 B, (1,0)>

and is evaluated on arbitrary ambient vectors, so the normal direction is
part of the same inner product.
"""
import enum
from dataclasses import dataclass

from . import _kernels
from .ambient import SpaceKind, as_point, require_on_manifold
from .errors import DomainError

CAUSAL_TOL = 1e-12


@dataclass(frozen=True)
class BergerParams:
    lam: float = 1.0
    mu: float = 1.0
    nu: float = 1.0

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            value = float(getattr(self, name))
            if not value > 0:
                raise DomainError(f"{name} must be positive, got {value!r}")
            object.__setattr__(self, name, value)

    def as_tuple(self):
        return (self.lam, self.mu, self.nu)


@dataclass(frozen=True)
class Signature:
    eps1: int = 1
    eps2: int = 1
    eps3: int = 1

    def __post_init__(self):
        for name in ("eps1", "eps2", "eps3"):
            value = getattr(self, name)
            if value not in (1, -1):
                raise ValueError(f"{name} must be +1 or -1, got {value!r}")
            object.__setattr__(self, name, int(value))

    def as_tuple(self):
        return (self.eps1, self.eps2, self.eps3)

    def __str__(self):
        return ",".join("+" if e > 0 else "-" for e in self.as_tuple())

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse ``"+,-,+"`` style strings."""
        parts = [s.strip() for s in str(text).split(",")]
        if len(parts) != 3 or any(s not in ("+", "-") for s in parts):
            raise ValueError(f"signature must look like '+,+,+', got {text!r}")
        return cls(*(1 if s == "+" else -1 for s in parts))

    @property
    def name(self) -> str:
        if self == RIEMANNIAN:
            return "riemannian"
        if self == LORENTZIAN:
            return "lorentzian"
        return str(self)


RIEMANNIAN = Signature(1, 1, 1)
LORENTZIAN = Signature(-1, 1, 1)


@dataclass(frozen=True)
class ModelSpec:
    space: SpaceKind
    params: BergerParams = BergerParams()
    signature: Signature = RIEMANNIAN

    @property
    def weights(self):
        """Diagonal metric entries (eps1 lam^2, eps2 mu^2, eps3 nu^2)."""
        e, (lam, mu, nu) = self.signature.as_tuple(), self.params.as_tuple()
        return (e[0] * lam * lam, e[1] * mu * mu, e[2] * nu * nu)

    @property
    def is_tabulated(self) -> bool:
        return self.signature in (RIEMANNIAN, LORENTZIAN)

    def label(self) -> str:
        return f"{self.space.value}/{self.signature.name}"

    def with_params(self, lam=None, mu=None, nu=None) -> "ModelSpec":
        p = self.params
        return ModelSpec(
            self.space,
            BergerParams(
                p.lam if lam is None else lam,
                p.mu if mu is None else mu,
                p.nu if nu is None else nu,
            ),
            self.signature,
        )

    def with_signature(self, signature: Signature) -> "ModelSpec":
        return ModelSpec(self.space, self.params, signature)


class CausalClass(enum.Enum):
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    SPACELIKE = "spacelike"


def berger_ip(p, a, b, spec: ModelSpec) -> float:
    p = require_on_manifold(p, spec.space)
    return _kernels.inner(
        spec.space.sign,
        spec.signature.as_tuple(),
        spec.params.as_tuple(),
        p,
        as_point(a),
        as_point(b),
    )


def causal_character(p, a, spec: ModelSpec, tol: float = CAUSAL_TOL) -> CausalClass:
    q = berger_ip(p, a, a, spec)
    if q < -tol:
        return CausalClass.TIMELIKE
    if abs(q) <= tol and any(as_point(a)):
        return CausalClass.LIGHTLIKE
    return CausalClass.SPACELIKE
