"""Truncated bicomplex power/Laurent series and univalence functionals.

Two series shapes are supported, both with bicomplex coefficients acting
independently per idempotent slot:

* ``power-F``:      F(Z) = Z + sum_{n>=2} A_n Z^n        (A_0 = 0, A_1 = 1),
  the normalized maps of the unit bidisk;
* ``laurent-Sigma``: G(Z) = Z + B_0 + sum_{n>=1} B_n Z^-n (leading coeff 1),
  the normalized maps of the exterior region |Z|_k > 1.

On top of these sit numeric functionals for the classical univalence
theorems in their bicomplex form: the area inequality
sum n*|B_n|_k^2 <= 1, the second-coefficient bound |A_2|_k <= 2 through the
square-root/inversion transform pipeline, and the quarter-disk covering
probe via boundary sampling.  All functionals split per slot, so every
result is a Hyperbolic pair.

Series are truncated at a fixed order N which is carried in every result;
evaluating a truncation outside its reliable radius is the caller's risk
(bound checks then simply fail honestly).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Bicomplex, Hyperbolic
from .errors import DomainError, InvalidRotationError, NullConeError

KIND_POWER = "power-F"
KIND_LAURENT = "laurent-Sigma"

_UNIMODULAR_TOL = 1e-12


def _as_bicomplex(x) -> Bicomplex:
    if isinstance(x, Bicomplex):
        return x
    return Bicomplex.from_scalar(x)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of a truncated series, indexed as stored.

    ``power-F``:       coeffs[n] multiplies Z^n for n = 0..N.
    ``laurent-Sigma``: coeffs[0] multiplies Z, coeffs[1] is the constant
                       B_0, coeffs[n+1] multiplies Z^-n for n = 1..N.
    """

    kind: str
    coeffs: tuple[Bicomplex, ...]
    order: int

    def slot(self, slot: int) -> np.ndarray:
        """Coefficient array of one idempotent slot."""
        if slot == 1:
            return np.array([c.beta1 for c in self.coeffs], dtype=complex)
        return np.array([c.beta2 for c in self.coeffs], dtype=complex)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "N": self.order,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> TruncatedSeries:
        kind = obj["kind"]
        coeffs = [Bicomplex.from_json(c) for c in obj["coeffs"]]
        if kind == KIND_POWER:
            s = power_series(coeffs)
        elif kind == KIND_LAURENT:
            s = laurent_series(coeffs)
        else:
            raise ValueError(f"unknown series kind {kind!r}")
        if "N" in obj and int(obj["N"]) != s.order:
            raise ValueError(
                f"declared order {obj['N']} does not match {len(coeffs)} coefficients"
            )
        return s


def power_series(coeffs) -> TruncatedSeries:
    """Build a normalized power series; coeffs[0] must be 0, coeffs[1] must be 1."""
    cs = tuple(_as_bicomplex(c) for c in coeffs)
    if len(cs) < 2:
        raise ValueError("a normalized power series needs at least coefficients 0 and 1")
    if not cs[0].is_zero():
        raise ValueError("normalization requires zero constant coefficient")
    if cs[1] != Bicomplex.from_scalar(1):
        raise ValueError("normalization requires unit linear coefficient")
    return TruncatedSeries(KIND_POWER, cs, len(cs) - 1)


def laurent_series(coeffs) -> TruncatedSeries:
    """Build an exterior series; coeffs[0] (the Z coefficient) must be 1."""
    cs = tuple(_as_bicomplex(c) for c in coeffs)
    if len(cs) < 2:
        raise ValueError("an exterior series needs the leading and constant coefficients")
    if cs[0] != Bicomplex.from_scalar(1):
        raise ValueError("exterior series must have unit leading coefficient")
    return TruncatedSeries(KIND_LAURENT, cs, len(cs) - 2)


def identity_series(order: int = 1) -> TruncatedSeries:
    cs = [Bicomplex.from_scalar(0), Bicomplex.from_scalar(1)]
    cs += [Bicomplex.from_scalar(0)] * (order - 1)
    return power_series(cs)


# -- evaluation -------------------------------------------------------------


def _eval_power_slot(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Horner evaluation of sum c[n] z^n."""
    return np.polyval(c[::-1], z)


def _eval_laurent_slot(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """c[0]*z + c[1] + sum_{n>=1} c[n+1] z^-n via Horner in 1/z."""
    return c[0] * z + np.polyval(c[:0:-1], 1.0 / z)


def series_eval(s: TruncatedSeries, z: Bicomplex) -> Bicomplex:
    """Value of the truncated sum at a bicomplex point, slot by slot."""
    if s.kind == KIND_LAURENT and z.in_null_cone():
        raise NullConeError(
            "exterior series cannot be evaluated on the null cone "
            f"(idempotent components {z.beta1}, {z.beta2})"
        )
    ev = _eval_power_slot if s.kind == KIND_POWER else _eval_laurent_slot
    v1 = ev(s.slot(1), np.array([z.beta1]))[0]
    v2 = ev(s.slot(2), np.array([z.beta2]))[0]
    return Bicomplex(complex(v1), complex(v2))


# -- constructions ----------------------------------------------------------


def koebe_rotation_series(bparam: Bicomplex, order: int) -> TruncatedSeries:
    """The map t -> t / (1 + B t)^2 as a power series, truncated.

    Coefficients are A_n = n * (-B)^(n-1); the parameter must be unimodular
    in both slots (these are exactly the extremal maps for the
    second-coefficient bound).
    """
    nrm = bparam.norm_k()
    if abs(nrm.a1 - 1.0) > _UNIMODULAR_TOL or abs(nrm.a2 - 1.0) > _UNIMODULAR_TOL:
        raise InvalidRotationError(
            f"rotation parameter must be unimodular per slot, got |B|_k = {nrm.as_tuple()}"
        )
    if order < 1:
        raise DomainError("truncation order must be at least 1")
    coeffs = [Bicomplex.from_scalar(0)]
    for n in range(1, order + 1):
        coeffs.append(Bicomplex.from_scalar(n) * (-bparam) ** (n - 1))
    return power_series(coeffs)


def sqrt_transform(f: TruncatedSeries) -> TruncatedSeries:
    """The odd series G with G(Z)^2 = F(Z^2), G normalized.

    Matching convolution coefficients of G^2 against F(Z^2) determines the
    odd coefficients triangularly: each new one enters linearly with factor
    2 (the leading coefficient is 1, so no null-cone division can occur).
    In particular G_3 = A_2/2 and G_5 = (A_3 - A_2^2/4)/2.
    """
    if f.kind != KIND_POWER:
        raise ValueError("square-root transform applies to normalized power series")
    n_in = f.order
    out_order = max(2 * n_in - 1, 1)
    g1 = np.zeros(out_order + 1, dtype=complex)
    g2 = np.zeros(out_order + 1, dtype=complex)
    a1 = f.slot(1)
    a2 = f.slot(2)
    for g, a in ((g1, a1), (g2, a2)):
        g[1] = 1.0
        for m in range(2, n_in + 1):
            acc = 0j
            for i in range(3, 2 * m - 3 + 1, 2):
                acc += g[i] * g[2 * m - i]
            g[2 * m - 1] = (a[m] - acc) / 2.0
    coeffs = [Bicomplex(complex(x), complex(y)) for x, y in zip(g1, g2)]
    return power_series(coeffs)


def inversion_transform(g: TruncatedSeries) -> TruncatedSeries:
    """The exterior series H(Z) = 1 / G(1/Z) for an odd normalized G.

    Coefficients come from the product identity G(1/Z) * H(Z) = 1 solved
    order by order; the constant term is always 0 and the first tail
    coefficient is -G_3.
    """
    if g.kind != KIND_POWER:
        raise ValueError("inversion transform applies to normalized power series")
    gs1 = g.slot(1)
    gs2 = g.slot(2)
    for gs in (gs1, gs2):
        if any(gs[i] != 0 for i in range(0, len(gs), 2)):
            raise ValueError("inversion transform needs an odd series")
    m_ord = g.order
    n_out = max(m_ord - 2, 0)
    out1 = _invert_slot(gs1, m_ord, n_out)
    out2 = _invert_slot(gs2, m_ord, n_out)
    coeffs = [Bicomplex(complex(x), complex(y)) for x, y in zip(out1, out2)]
    return laurent_series(coeffs)


def _invert_slot(gs: np.ndarray, m_ord: int, n_out: int) -> np.ndarray:
    # c[k] for k = -1..n_out with c[-1] = 1; recurrence
    # c[k-1] = -sum_{m odd, 3 <= m <= min(M, k+1)} g[m] * c[k-m]
    c = np.zeros(n_out + 2, dtype=complex)  # c[i+1] holds C_i, so c[0] = C_{-1}
    c[0] = 1.0
    for k in range(1, n_out + 2):
        acc = 0j
        for m in range(3, min(m_ord, k + 1) + 1, 2):
            acc += gs[m] * c[k - m + 1]
        c[k] = -acc
    return c


# -- functionals ------------------------------------------------------------


def gronwall_area_sum(g: TruncatedSeries) -> Hyperbolic:
    """sum_n n * |B_n|_k^2 over the truncated tail, per slot."""
    if g.kind != KIND_LAURENT:
        raise ValueError("area sum is defined for exterior series")
    n = np.arange(1, g.order + 1)
    s1 = float(np.sum(n * np.abs(g.slot(1)[2:]) ** 2)) if g.order >= 1 else 0.0
    s2 = float(np.sum(n * np.abs(g.slot(2)[2:]) ** 2)) if g.order >= 1 else 0.0
    return Hyperbolic(s1, s2)


def area_contour_estimate(g: TruncatedSeries, r: float, nsamples: int) -> Hyperbolic:
    """Enclosed area of each slot's image of the circle of radius r.

    Integrates (1/2) Im(conj(w) dw) with the periodic trapezoid rule, which
    is exact for trigonometric polynomials once nsamples exceeds the
    bandwidth; for a truncation this matches the closed form
    pi * (r^2 - sum n |B_n|^2 r^(-2n)) to quadrature accuracy.
    """
    if g.kind != KIND_LAURENT:
        raise ValueError("contour area is defined for exterior series")
    if r <= 1:
        raise DomainError(f"sampling radius must exceed 1, got {r}")
    if nsamples < max(4 * g.order, 4):
        raise DomainError(
            f"need at least {max(4 * g.order, 4)} samples for order {g.order}"
        )
    theta = 2 * np.pi * np.arange(nsamples) / nsamples
    z = r * np.exp(1j * theta)
    areas = []
    for slot in (1, 2):
        c = g.slot(slot)
        w = _eval_laurent_slot(c, z)
        dw = 1j * c[0] * z
        if g.order >= 1:
            n = np.arange(1, g.order + 1)
            dw = dw + (c[2:, None] * (-1j * n[:, None]) * z[None, :] ** (-n[:, None])).sum(axis=0)
        areas.append(float(0.5 * np.mean(np.imag(np.conj(w) * dw)) * 2 * np.pi))
    return Hyperbolic(areas[0], areas[1])


@dataclass(frozen=True)
class BieberbachResult:
    """Outcome of the second-coefficient bound check."""

    value: Hyperbolic
    holds: bool
    trace: dict

    def __iter__(self):
        return iter((self.value, self.holds))


def bieberbach_check(f: TruncatedSeries) -> BieberbachResult:
    """|A_2|_k against the bound (2, 2), with the transform-pipeline trace.

    The trace records the square-root transform's cubic coefficient, the
    inversion transform's first tail coefficient C_1 = -A_2/2, and the
    area sum of the computed exterior tail, so the bound can be audited
    through the same route the classical proof takes.
    """
    if f.kind != KIND_POWER:
        raise ValueError("second-coefficient check applies to normalized power series")
    a2 = f.coeffs[2] if f.order >= 2 else Bicomplex.from_scalar(0)
    value = a2.norm_k()
    holds = value.leq(Hyperbolic(2.0, 2.0))
    g = sqrt_transform(f)
    h = inversion_transform(g)
    c1 = h.coeffs[2] if h.order >= 1 else Bicomplex.from_scalar(0)
    trace = {
        "abs_a2": list(value.as_tuple()),
        "bound": [2.0, 2.0],
        "sqrt_cubic_coeff": g.coeffs[3].to_json() if g.order >= 3 else None,
        "inversion_c1": c1.to_json(),
        "abs_c1": list(c1.norm_k().as_tuple()),
        "c1_within_unit": c1.norm_k().leq(Hyperbolic(1.0, 1.0)),
        "tail_area_sum": list(gronwall_area_sum(h).as_tuple()),
    }
    return BieberbachResult(value, holds, trace)


def koebe_covering_min(f: TruncatedSeries, r: float, nsamples: int) -> Hyperbolic:
    """Per-slot minimum of |F(r e^(i theta))| over equispaced samples.

    For a univalent map the image of the circle bounds the image of the
    disk, so this minimum is a lower-bound proxy for the covered disk
    radius.  Univalence is the caller's assertion and truncation error is
    the caller's risk: the probe reports whatever the truncated polynomial
    does on the circle.
    """
    if f.kind != KIND_POWER:
        raise ValueError("covering probe applies to normalized power series")
    if not 0 < r < 1:
        raise DomainError(f"probe radius must lie in (0, 1), got {r}")
    if nsamples < 8:
        raise DomainError("need at least 8 boundary samples")
    theta = 2 * np.pi * np.arange(nsamples) / nsamples
    z = r * np.exp(1j * theta)
    m1 = float(np.min(np.abs(_eval_power_slot(f.slot(1), z))))
    m2 = float(np.min(np.abs(_eval_power_slot(f.slot(2), z))))
    return Hyperbolic(m1, m2)
