"""Constructive approximation on product-type compacts.

Each slot of a product-type function is fit independently on its plane
region; the complement pattern of the product compact decides the form:

    T4 (both complements connected)   polynomial x polynomial
    T2 (slot-1 complement has holes)  rational slot 1, polynomial slot 2
    T3 (mirror)                       polynomial slot 1, rational slot 2
    T1 (both have holes)              rational x rational

Polynomial fits use a degree-escalating orthonormal basis built by the
Vandermonde-with-Arnoldi device: each new power is orthogonalized against
the previous basis vectors on the sample set, which keeps the least-squares
problem well conditioned far beyond where raw monomials give up.  Rational
fits append prescribed-pole columns (z - p)^-m, one pole per bounded
complement component, and escalate degree and pole orders jointly.

Errors are always measured on a validation sample four times denser than
the fitting sample, as a per-slot sup norm; the pair of slot sup errors is
the hyperbolic sup error of the bicomplex approximant.  Everything is
deterministic given (inputs, seed): fitting a slot never looks at the
other slot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Bicomplex, Hyperbolic
from .errors import (
    DegreeExceededError,
    DomainError,
    IllConditionedError,
    PolePlacementError,
)
from .funcspec import Expr, FunctionSpec, check_poles_clear
from .regions import PlanarRegion, ProductCompact, classify_complement, sample_region

DEFAULT_SEED = 1729
_VALIDATION_SEED_OFFSET = 1_000_003


# -- approximant representation ----------------------------------------------


@dataclass(frozen=True)
class PoleTerm:
    """Partial-fraction block at one finite pole: sum_m coeffs[m-1] * (z-p)^-m."""

    location: complex
    order: int
    coeffs: tuple[complex, ...]

    def __call__(self, z: np.ndarray) -> np.ndarray:
        u = 1.0 / (np.asarray(z, dtype=complex) - self.location)
        return np.polyval(list(self.coeffs[::-1]) + [0j], u)

    def to_json(self) -> dict:
        return {
            "location": [self.location.real, self.location.imag],
            "order": self.order,
            "coeffs": [[c.real, c.imag] for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> PoleTerm:
        return PoleTerm(
            complex(obj["location"][0], obj["location"][1]),
            int(obj["order"]),
            tuple(complex(c[0], c[1]) for c in obj["coeffs"]),
        )


@dataclass(frozen=True)
class SlotRational:
    """One slot of a bicomplex rational: polynomial part plus pole blocks.

    The polynomial is stored in the centered variable w = (z - center)/scale
    (ascending coefficients); centering keeps the coefficients meaningful at
    the degrees the escalation reaches.  A slot with no pole blocks is a
    pure polynomial, i.e. its only pole is at infinity.
    """

    center: complex
    scale: float
    poly: tuple[complex, ...]
    poles: tuple[PoleTerm, ...] = ()

    def __call__(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        w = (z - self.center) / self.scale
        vals = np.polyval(self.poly[::-1], w)
        for block in self.poles:
            vals = vals + block(z)
        return vals

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    @property
    def pole_orders(self) -> tuple[int, ...]:
        return tuple(b.order for b in self.poles)

    def is_polynomial(self) -> bool:
        return not self.poles

    def to_json(self) -> dict:
        return {
            "center": [self.center.real, self.center.imag],
            "scale": self.scale,
            "poly": [[c.real, c.imag] for c in self.poly],
            "poles": [b.to_json() for b in self.poles],
        }

    @staticmethod
    def from_json(obj: dict) -> SlotRational:
        return SlotRational(
            complex(obj["center"][0], obj["center"][1]),
            float(obj["scale"]),
            tuple(complex(c[0], c[1]) for c in obj["poly"]),
            tuple(PoleTerm.from_json(b) for b in obj["poles"]),
        )


@dataclass(frozen=True)
class BicomplexRational:
    """Product-type rational approximant R = R1*e1 + R2*e2."""

    r1: SlotRational
    r2: SlotRational

    def slot(self, slot: int) -> SlotRational:
        return self.r1 if slot == 1 else self.r2

    def evaluate_slot(self, slot: int, z) -> np.ndarray:
        return self.slot(slot)(z)

    def evaluate(self, z: Bicomplex) -> Bicomplex:
        v1 = self.r1(np.asarray([z.beta1]))[0]
        v2 = self.r2(np.asarray([z.beta2]))[0]
        return Bicomplex(complex(v1), complex(v2))

    def pole_marker(self) -> tuple[str, str]:
        """Per slot, "finite" when the slot carries finite poles, else "inf"
        (a pure polynomial's pole sits at that slot's infinity)."""
        return (
            "finite" if not self.r1.is_polynomial() else "inf",
            "finite" if not self.r2.is_polynomial() else "inf",
        )

    def pole_points_extended(self) -> list[dict]:
        """Pole locations as extended-plane points {"b1": ..., "b2": ...},
        pairing every slot-1 pole (or infinity) with every slot-2 one."""

        def marks(sr: SlotRational):
            if sr.is_polynomial():
                return ["inf"]
            return [[b.location.real, b.location.imag] for b in sr.poles]

        return [{"b1": m1, "b2": m2} for m1 in marks(self.r1) for m2 in marks(self.r2)]

    def to_json(self) -> dict:
        return {"r1": self.r1.to_json(), "r2": self.r2.to_json()}

    @staticmethod
    def from_json(obj: dict) -> BicomplexRational:
        return BicomplexRational(
            SlotRational.from_json(obj["r1"]), SlotRational.from_json(obj["r2"])
        )


# -- orthonormal polynomial basis on a sample set -----------------------------


class _ArnoldiBasis:
    """Orthonormal polynomial columns on a fixed sample set.

    Column k spans degrees <= k; the Hessenberg recurrence lets the same
    polynomials be evaluated on any other point set and converted to
    monomial coefficients.
    """

    def __init__(self, w: np.ndarray, degree: int):
        m = len(w)
        if m < degree + 2:
            raise IllConditionedError(
                f"{m} samples cannot support an orthonormal basis of degree {degree}"
            )
        q = np.zeros((m, degree + 1), dtype=complex)
        h = np.zeros((degree + 2, degree + 1), dtype=complex)
        q[:, 0] = 1.0 / math.sqrt(m)
        for k in range(degree):
            v = w * q[:, k]
            ref = np.linalg.norm(v)
            for _ in range(2):  # two Gram-Schmidt passes
                for i in range(k + 1):
                    c = np.vdot(q[:, i], v)
                    h[i, k] += c
                    v -= c * q[:, i]
            nrm = np.linalg.norm(v)
            if nrm <= 1e-14 * max(ref, 1e-300):
                raise IllConditionedError(
                    f"orthogonalization collapsed at degree {k + 1}; the sample "
                    "set cannot resolve this degree"
                )
            h[k + 1, k] = nrm
            q[:, k + 1] = v / nrm
        self.nsamples = m
        self.degree = degree
        self.q = q
        self.h = h

    def columns_at(self, w: np.ndarray, degree: int | None = None) -> np.ndarray:
        d = self.degree if degree is None else degree
        out = np.zeros((len(w), d + 1), dtype=complex)
        out[:, 0] = 1.0 / math.sqrt(self.nsamples)
        for k in range(d):
            v = w * out[:, k]
            for i in range(k + 1):
                v = v - self.h[i, k] * out[:, i]
            out[:, k + 1] = v / self.h[k + 1, k]
        return out

    def monomial_coeffs(self, coef: np.ndarray) -> np.ndarray:
        """Ascending monomial coefficients (in w) of sum_k coef[k] * p_k(w)."""
        d = len(coef) - 1
        basis = [np.array([1.0 / math.sqrt(self.nsamples)], dtype=complex)]
        for k in range(d):
            c = np.zeros(k + 2, dtype=complex)
            c[1:] = basis[k]
            for i in range(k + 1):
                c[: i + 1] -= self.h[i, k] * basis[i]
            basis.append(c / self.h[k + 1, k])
        out = np.zeros(d + 1, dtype=complex)
        for k, b in enumerate(basis):
            out[: k + 1] += coef[k] * b
        return out


# -- slot fitting --------------------------------------------------------------


@dataclass(frozen=True)
class SlotFit:
    """Outcome of one slot fit."""

    approximant: SlotRational
    sup_error: float
    degree: int
    pole_orders: tuple[int, ...]
    achieved: bool
    trace: tuple[tuple[int, tuple[int, ...], float], ...]


def _fvals(f, pts: np.ndarray) -> np.ndarray:
    if isinstance(f, Expr):
        return np.asarray(f.evaluate(pts), dtype=complex)
    return np.asarray(f(pts), dtype=complex)


def _default_samples(max_degree: int, total_order: int) -> tuple[int, int]:
    nb = max(240, 6 * (max_degree + total_order + 1))
    return nb, nb // 2


def _fit_points(region: PlanarRegion, n_boundary, n_interior, seed, max_degree, total_order):
    if n_boundary is None or n_interior is None:
        db, di = _default_samples(max_degree, total_order)
        n_boundary = db if n_boundary is None else n_boundary
        n_interior = di if n_interior is None else n_interior
    fit = sample_region(region, n_boundary, n_interior, seed)
    val = sample_region(
        region, 4 * n_boundary, 4 * n_interior, seed + _VALIDATION_SEED_OFFSET
    )
    return fit, val, n_boundary, n_interior


def fit_polynomial_slot(
    f,
    region: PlanarRegion,
    eps: float,
    max_degree: int,
    *,
    n_boundary: int | None = None,
    n_interior: int | None = None,
    seed: int = DEFAULT_SEED,
) -> SlotFit:
    """Least-squares polynomial fit with degree escalation.

    Escalates through the orthonormal basis until the sup error on the
    validation sample drops to eps; raises DegreeExceededError (carrying
    the best fit) when the budget runs out.  Convergence is guaranteed
    only when the region's complement is connected and f is holomorphic
    on a neighborhood; calling it on a holed region is allowed and simply
    tends to end in DegreeExceededError.
    """
    if eps <= 0:
        raise DomainError("error target must be positive")
    fit, val, _, _ = _fit_points(region, n_boundary, n_interior, seed, max_degree, 0)
    zf = fit.all_points
    zv = val.all_points
    fvals = _fvals(f, zf)
    fv = _fvals(f, zv)
    center, scale = region.center_scale()
    basis = _ArnoldiBasis((zf - center) / scale, max_degree)
    coef_full = basis.q.conj().T @ fvals
    wv = basis.columns_at((zv - center) / scale)

    resid = fv.copy()
    trace: list[tuple[int, tuple[int, ...], float]] = []
    best_err = math.inf
    best_deg = 0
    for d in range(max_degree + 1):
        resid = resid - coef_full[d] * wv[:, d]
        err = float(np.max(np.abs(resid)))
        trace.append((d, (), err))
        if err < best_err:
            best_err, best_deg = err, d
        if err <= eps:
            sr = SlotRational(
                center, scale,
                tuple(complex(c) for c in basis.monomial_coeffs(coef_full[: d + 1])),
            )
            true_err = float(np.max(np.abs(fv - sr(zv))))
            if true_err <= eps:
                return SlotFit(sr, true_err, d, (), True, tuple(trace))
    sr = SlotRational(
        center, scale,
        tuple(complex(c) for c in basis.monomial_coeffs(coef_full[: best_deg + 1])),
    )
    err = float(np.max(np.abs(fv - sr(zv))))
    raise DegreeExceededError(
        f"degree budget {max_degree} exhausted; best sup error {err:.3e} > {eps:.3e}",
        SlotFit(sr, err, best_deg, (), False, tuple(trace)),
        err,
    )


def _validate_poles(region: PlanarRegion, poles) -> list[tuple[complex, int]]:
    holes = region.bounded_holes()
    poles = [(complex(p), int(cap)) for p, cap in poles]
    if len(poles) != holes:
        raise PolePlacementError(
            f"region has {holes} bounded complement component(s) but "
            f"{len(poles)} pole(s) were prescribed"
        )
    seen: set[int] = set()
    for p, cap in poles:
        if cap < 1:
            raise PolePlacementError(f"pole order cap must be >= 1, got {cap}")
        idx = region.hole_index(p)
        if idx is None:
            raise PolePlacementError(
                f"pole {p} lies in the region or its unbounded complement component"
            )
        if idx in seen:
            raise PolePlacementError(
                f"two prescribed poles share bounded complement component {idx}"
            )
        seen.add(idx)
    return poles


def fit_rational_slot(
    f,
    region: PlanarRegion,
    poles,
    eps: float,
    max_degree: int,
    *,
    n_boundary: int | None = None,
    n_interior: int | None = None,
    seed: int = DEFAULT_SEED,
) -> SlotFit:
    """Least-squares fit in {1, w, ..., w^d} + {(z-p_j)^-m} with joint
    degree/order escalation.

    poles is a sequence of (location, max_order); there must be exactly one
    pole per bounded complement component, each in its own component.
    """
    if eps <= 0:
        raise DomainError("error target must be positive")
    poles = _validate_poles(region, poles)
    caps = [cap for _, cap in poles]
    fit, val, _, _ = _fit_points(
        region, n_boundary, n_interior, seed, max_degree, sum(caps)
    )
    zf = fit.all_points
    zv = val.all_points
    fvals = _fvals(f, zf)
    fv = _fvals(f, zv)
    center, scale = region.center_scale()
    basis = _ArnoldiBasis((zf - center) / scale, max_degree)
    wv = basis.columns_at((zv - center) / scale)

    # pole columns on the fit sample, column-normalized for conditioning
    pole_cols = []
    pole_norms = []
    for p, cap in poles:
        cols = np.stack([(zf - p) ** (-m_) for m_ in range(1, cap + 1)], axis=1)
        norms = np.linalg.norm(cols, axis=0)
        pole_cols.append(cols / norms)
        pole_norms.append(norms)

    trace: list[tuple[int, tuple[int, ...], float]] = []
    best: SlotFit | None = None
    tmax = max(max_degree, max(caps) - 1)
    last_cfg = None
    for t in range(tmax + 1):
        d = min(t, max_degree)
        orders = tuple(min(t + 1, cap) for cap in caps)
        if (d, orders) == last_cfg:
            continue
        last_cfg = (d, orders)
        cols = [basis.q[:, : d + 1]]
        for j, (p, _cap) in enumerate(poles):
            cols.append(pole_cols[j][:, : orders[j]])
        a = np.hstack(cols)
        coef, *_ = np.linalg.lstsq(a, fvals, rcond=None)
        poly = tuple(complex(c) for c in basis.monomial_coeffs(coef[: d + 1]))
        blocks = []
        off = d + 1
        for j, (p, _cap) in enumerate(poles):
            raw = coef[off : off + orders[j]] / pole_norms[j][: orders[j]]
            blocks.append(PoleTerm(p, orders[j], tuple(complex(c) for c in raw)))
            off += orders[j]
        sr = SlotRational(center, scale, poly, tuple(blocks))
        err = float(np.max(np.abs(fv - sr(zv))))
        trace.append((d, orders, err))
        if best is None or err < best.sup_error:
            best = SlotFit(sr, err, d, orders, False, ())
        if err <= eps:
            return SlotFit(sr, err, d, orders, True, tuple(trace))
    assert best is not None
    best = SlotFit(
        best.approximant, best.sup_error, best.degree, best.pole_orders, False, tuple(trace)
    )
    raise DegreeExceededError(
        f"degree/order budget exhausted; best sup error {best.sup_error:.3e} > {eps:.3e}",
        best,
        best.sup_error,
    )


# -- product-level driver ------------------------------------------------------


@dataclass(frozen=True)
class FitBudget:
    """Escalation limits; pole order cap defaults to the degree cap."""

    max_degree: int = 40
    max_pole_order: int | None = None

    def order_cap(self) -> int:
        return self.max_degree if self.max_pole_order is None else self.max_pole_order


@dataclass(frozen=True)
class ApproxReport:
    """Machine-readable result of a product-compact approximation run."""

    classification: str
    complement_counts: tuple[int, int]
    sup_error: Hyperbolic
    target_eps: float
    achieved: bool
    degrees: tuple[int, int]
    pole_orders: tuple[tuple[int, ...], tuple[int, ...]]
    pole_marker: tuple[str, str]
    pole_points: list[dict]
    samples: dict
    seed: int
    diagnostics: dict

    def to_json(self) -> dict:
        return {
            "class": self.classification,
            "complement_components": list(self.complement_counts),
            "sup_error": {"a1": self.sup_error.a1, "a2": self.sup_error.a2},
            "target_eps": self.target_eps,
            "achieved": self.achieved,
            "degrees": list(self.degrees),
            "pole_orders": [list(o) for o in self.pole_orders],
            "pole_marker": {"e1": self.pole_marker[0], "e2": self.pole_marker[1]},
            "pole_points": self.pole_points,
            "samples": self.samples,
            "seed": self.seed,
            "diagnostics": self.diagnostics,
        }


def approximate(
    func: FunctionSpec,
    compact: ProductCompact,
    eps: float,
    budget: FitBudget = FitBudget(),
    poles=None,
    *,
    seed: int = DEFAULT_SEED,
    n_boundary: int | None = None,
    n_interior: int | None = None,
) -> tuple[BicomplexRational, ApproxReport]:
    """Approximate a product-type function on a product compact.

    The complement class picks polynomial or rational slots.  ``poles``
    optionally overrides per slot: a pair whose entries are None (auto:
    one pole per hole, anchored at hole centers, order-capped by the
    budget), an explicit list of (location, max_order), or an empty list
    to force a polynomial fit regardless of topology.

    A slot that exhausts its budget is reported honestly: the best
    approximant is returned with achieved=False and a diagnostic message.
    """
    if eps <= 0:
        raise DomainError("error target must be positive")
    cls = classify_complement(compact)
    requested = (None, None) if poles is None else poles
    fits: list[SlotFit] = []
    diagnostics: dict[str, dict] = {}
    for slot in (1, 2):
        region = compact.region(slot)
        expr = func.slot_expr(slot)
        check_poles_clear(expr, region)
        req = requested[slot - 1]
        if req is None:
            plist = [(a, budget.order_cap()) for a in region.hole_anchor_points()]
        else:
            plist = [(complex(p), int(cap)) for p, cap in req]
        kwargs = dict(n_boundary=n_boundary, n_interior=n_interior, seed=seed)
        try:
            if plist:
                fit = fit_rational_slot(
                    expr, region, plist, eps, budget.max_degree, **kwargs
                )
            else:
                fit = fit_polynomial_slot(expr, region, eps, budget.max_degree, **kwargs)
            note = "converged"
        except DegreeExceededError as exc:
            fit = exc.best
            note = str(exc)
        fits.append(fit)
        # denominator check: every pole must stay clear of the compact, so the
        # bicomplex denominator never meets the null cone on K
        clearance = None
        if fit.approximant.poles:
            probe = sample_region(region, 64, 32, seed).all_points
            clearance = min(
                float(np.min(np.abs(probe - block.location)))
                for block in fit.approximant.poles
            )
            if clearance <= 0:
                raise PolePlacementError(
                    f"slot {slot} approximant has a pole on the compact"
                )
        diagnostics[f"slot{slot}"] = {
            "achieved": fit.achieved,
            "note": note,
            "degree": fit.degree,
            "pole_orders": list(fit.pole_orders),
            "forced_polynomial": bool(req == [] and region.bounded_holes() > 0),
            "pole_clearance": clearance,
        }
    rational = BicomplexRational(fits[0].approximant, fits[1].approximant)
    sup = Hyperbolic(fits[0].sup_error, fits[1].sup_error)
    achieved = sup.lt(Hyperbolic(eps, eps))
    nb, ni = (n_boundary, n_interior)
    if nb is None or ni is None:
        db, di = _default_samples(budget.max_degree, budget.order_cap())
        nb = db if nb is None else nb
        ni = di if ni is None else ni
    report = ApproxReport(
        classification=cls.label,
        complement_counts=cls.counts,
        sup_error=sup,
        target_eps=eps,
        achieved=achieved,
        degrees=(fits[0].degree, fits[1].degree),
        pole_orders=(fits[0].pole_orders, fits[1].pole_orders),
        pole_marker=rational.pole_marker(),
        pole_points=rational.pole_points_extended(),
        samples={
            "n_boundary": nb,
            "n_interior": ni,
            "n_validation_boundary": 4 * nb,
            "n_validation_interior": 4 * ni,
        },
        seed=seed,
        diagnostics=diagnostics,
    )
    return rational, report


def sup_error_k(
    func: FunctionSpec,
    rational: BicomplexRational,
    compact: ProductCompact,
    n_validation: int,
    *,
    seed: int = DEFAULT_SEED,
) -> Hyperbolic:
    """Hyperbolic sup norm of F - R over fresh validation samples.

    n_validation points per slot, split 2:1 between boundary and interior;
    slot errors never mix.
    """
    nb = max(8, (2 * n_validation) // 3)
    ni = n_validation - nb
    errs = []
    for slot in (1, 2):
        pts = sample_region(
            compact.region(slot), nb, ni, seed + _VALIDATION_SEED_OFFSET
        ).all_points
        f = func.evaluate_slot(slot, pts)
        r = rational.evaluate_slot(slot, pts)
        errs.append(float(np.max(np.abs(f - r))))
    return Hyperbolic(errs[0], errs[1])
