"""Dirichlet-series models (L, phi) and their JSON configuration."""
import json
from dataclasses import dataclass, replace
from functools import partial
from typing import Callable, Optional

from config import MODELS, EXAMPLE_SIGMA1
from errors import DomainError, UnsupportedModelError
from schemas import validate_model_config
from specfun import phi_hat, zeta


def _unit(n):
    return 1.0


@dataclass(frozen=True)
class SeriesModel:
    """An L-function with its test function phi, as used by every bound.

    laurent holds (p_0, ..., p_{m_L-1}) of L(s) phi_hat(s) at s = 1. When
    unit_coefficients is set the model is zeta itself and psi may use the
    Hurwitz representation. With r0_strict the range for r is r0 < r < 1.
    """
    name: str
    coefficients: Callable[[int], complex]
    m_L: int
    sigma0: float
    r0: float
    test_sigma1: float
    L_eval: Callable
    phi_hat_eval: Callable
    laurent: Optional[tuple] = None
    r0_strict: bool = False
    unit_coefficients: bool = False

    def __post_init__(self):
        if int(self.m_L) != self.m_L or self.m_L < 0:
            raise DomainError(f"m_L must be a nonnegative integer, got {self.m_L!r}")
        if not self.test_sigma1 < 0.5:
            raise DomainError(f"sigma1 must be < 1/2, got {self.test_sigma1}")
        lower_ok = self.sigma0 <= self.r0 if self.r0_strict else self.sigma0 < self.r0
        if not (lower_ok and self.r0 < 1):
            raise DomainError(f"need sigma0 < r0 < 1, got sigma0={self.sigma0}, r0={self.r0}")
        if self.laurent is not None:
            object.__setattr__(self, "laurent", tuple(complex(p) for p in self.laurent))
            if len(self.laurent) != self.m_L:
                raise DomainError(f"{len(self.laurent)} Laurent coefficients for pole order {self.m_L}")

    @property
    def sigma1(self):
        return self.test_sigma1

    def check_r(self, r):
        ok = self.r0 < r < 1 if self.r0_strict else self.r0 <= r < 1
        if not ok:
            bound = f"{self.r0} < r < 1" if self.r0_strict else f"{self.r0} <= r < 1"
            raise DomainError(f"r = {r} outside the admissible range {bound} for model {self.name!r}")

    def describe(self):
        return {
            "name": self.name,
            "sigma0": self.sigma0,
            "sigma1": self.test_sigma1,
            "r0": self.r0,
            "r0_strict": self.r0_strict,
            "m_L": self.m_L,
        }


def zeta_model(sigma1=EXAMPLE_SIGMA1):
    """zeta with phi(t) = (1-t)^(-sigma1) on (0,1); p_0 = phi_hat(1) = 1/(1-sigma1)."""
    if not sigma1 < 0.5:
        raise DomainError(f"sigma1 must be < 1/2, got {sigma1}")
    base = MODELS["zeta"]
    return SeriesModel(
        name="zeta",
        coefficients=_unit,
        m_L=base["m_L"],
        sigma0=base["sigma0"],
        r0=max(base["sigma0"], sigma1),
        test_sigma1=sigma1,
        L_eval=zeta,
        phi_hat_eval=partial(phi_hat, sigma1=sigma1),
        laurent=(1.0 / (1.0 - sigma1),),
        r0_strict=True,
        unit_coefficients=True,
    )


def model_from_dict(data, source="model configuration"):
    validate_model_config(data, source)
    name = data["name"]
    if name not in MODELS:
        raise UnsupportedModelError(f"model {name!r} is not built in (known: {sorted(MODELS)})")
    base = MODELS[name]
    for key in ("sigma0", "m_L"):
        if key in data and data[key] != base[key]:
            raise UnsupportedModelError(f"model {name!r} has fixed {key} = {base[key]}")
    model = zeta_model(float(data.get("sigma1", base["sigma1"])))
    if "r0" in data:
        r0 = float(data["r0"])
        if r0 < model.r0:
            raise DomainError(f"r0 = {r0} is below the range where psi is square integrable ({model.r0})")
        if r0 > model.r0:
            model = replace(model, r0=r0, r0_strict=False)
    return model


def load_model(path):
    """Read a JSON model description {name, sigma0, sigma1, r0, m_L}."""
    with open(path) as f:
        data = json.load(f)
    return model_from_dict(data, source=str(path))
