"""
Klein-Gordon equation with a minimal-length (GUP) correction.

The fourth-order equation is written as a second-order pair for the wave
function Psi and Phi = Delta_g Psi, coming from the Lagrangian

    L = sqrt|g| (1/2 g^ij Psi_i Psi_j + 2 b g^ij Psi_i Phi_j) - sqrt|g| (1/2 V0 Psi^2 - b Phi^2)

with b = beta hbar^2, i.e. H = [[1, 2b], [2b, 0]] and V = 1/2 V0 Psi^2 - b Phi^2.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import sympy as sp

from collineate.cases.base import BaseCase
from collineate.cases.registry import CaseRegistry
from collineate.cases.solutions import EvaluationMode, FieldSolution, SolutionMode, from_modes
from collineate.cases.special import BesselI, BesselK, Hyp2F1, RGamma
from collineate.core.exceptions import CaseError
from collineate.core.utils import EngineContext
from collineate.expr import differentiate, is_zero, simplify, substitute
from collineate.geometry import Metric, MetricRole, VField, laplacian, lie_derivative_metric
from collineate.symmetry import (
    Generator,
    QuasilinearSystem,
    check_lie_condition,
    check_noether_condition,
    euler_lagrange,
)

GUP_FIELDS = ("Psi", "Phi")


@dataclass(frozen=True)
class GupParameters:
    beta: sp.Expr
    hbar: sp.Expr
    V0: sp.Expr

    @classmethod
    def symbolic(cls) -> "GupParameters":
        return cls(*sp.symbols("beta hbar V0"))

    @property
    def b(self) -> sp.Expr:
        return self.beta * self.hbar ** 2

    @property
    def lam(self) -> sp.Expr:
        """lambda = sqrt(1 - 8 V0 b)"""
        return sp.sqrt(1 - 8 * self.V0 * self.b)

    @property
    def symbols(self) -> Tuple[sp.Symbol, ...]:
        free = set().union(*(sp.sympify(v).free_symbols for v in (self.beta, self.hbar, self.V0)))
        return tuple(sorted(free, key=lambda s: s.name))

    def eigenvalues(self) -> Tuple[sp.Expr, sp.Expr]:
        """Roots s of 2b s^2 + s + V0 = 0: ((lambda - 1)/4b, -(1 + lambda)/4b)."""
        return (self.lam - 1) / (4 * self.b), -(1 + self.lam) / (4 * self.b)

    def flow_rate(self, eigenvalue: sp.Expr) -> sp.Expr:
        """Rate 1 + 2b s at which the Z flow scales a mode with Delta Psi = s Psi."""
        return 1 + 2 * self.b * eigenvalue


def minkowski_metric() -> Metric:
    return Metric.diagonal(sp.symbols("t x y z"), (1, -1, -1, -1))


def hyperbolic_metric() -> Metric:
    """ds^2 = dtheta^2 - e^(2 theta) dphi^2"""
    theta, phi = sp.symbols("theta phi")
    return Metric.diagonal((theta, phi), (1, -sp.exp(2 * theta)))


def gup_field_metric(params: GupParameters) -> Metric:
    b = params.b
    return Metric(sp.symbols(GUP_FIELDS), sp.ImmutableMatrix([[1, 2 * b], [2 * b, 0]]), MetricRole.DEPENDENT)


def gup_potential(params: GupParameters) -> sp.Expr:
    psi, phi = sp.symbols(GUP_FIELDS)
    return sp.Rational(1, 2) * params.V0 * psi ** 2 - params.b * phi ** 2


def _laplace_beltrami(system: QuasilinearSystem, A: int) -> sp.Expr:
    jets = system.jets
    total = sum(
        system.trace_coefficient(i, j) * jets.second(A, i, j)
        for i in range(system.n)
        for j in range(i, system.n)
    )
    return total - sum(system.gamma[i] * jets.first(A, i) for i in range(system.n))


def make_gup_system(
    g: Metric,
    params: Optional[GupParameters] = None,
    name: str = "gup",
    ctx: Optional[EngineContext] = None,
) -> QuasilinearSystem:
    """
    Euler-Lagrange system of the GUP Lagrangian over ``g``.

    The result is checked to be exactly the displayed pair

        Delta Psi - Phi = 0
        2b Delta Phi + V0 Psi + Phi = 0

    Raises:
        CaseError: If beta hbar^2 vanishes or the derived system differs.
    """
    params = params or GupParameters.symbolic()
    ctx = ctx or EngineContext()
    if simplify(params.b) == 0:
        raise CaseError("beta*hbar^2 must be nonzero")

    system = euler_lagrange(g, gup_field_metric(params), gup_potential(params), name=name, ctx=ctx)
    psi, phi = system.u
    expected = (
        _laplace_beltrami(system, 0) - phi,
        _laplace_beltrami(system, 1) + (params.V0 * psi + phi) / (2 * params.b),
    )
    for A, (got, want) in enumerate(zip(system.equations, expected)):
        if not is_zero(got - want, ctx):
            raise CaseError("GUP system differs from its displayed form", f"equation {GUP_FIELDS[A]}")
    return system


def gup_generators(params: GupParameters) -> Dict[str, VField]:
    """
    Named collineations of H: gradient KVs K1, K2, the boost KV R, HV Y,
    ACs A1..A4 and Z.
    """
    psi, phi = sp.symbols(GUP_FIELDS)
    b, V0 = params.b, params.V0
    u = (psi, phi)
    fields = {
        "K1": (1, 0),
        "K2": (0, 1),
        "R": (2 * b * psi, -psi - 2 * b * phi),
        "Y": (psi, phi),
        "A1": (psi, 0),
        "A2": (0, phi),
        "A3": (phi, 0),
        "A4": (0, psi),
    }
    result = {k: VField(u, tuple(sp.sympify(c) for c in v)) for k, v in fields.items()}
    result["Z"] = result["A1"] + result["A3"].scale(2 * b) + result["A4"].scale(-V0)
    return result


def published_boost(params: GupParameters) -> VField:
    """The printed form 2b Psi d_Psi + (Psi + 2b Phi) d_Phi, which is not a KV of H."""
    psi, phi = sp.symbols(GUP_FIELDS)
    b = params.b
    return VField((psi, phi), (2 * b * psi, psi + 2 * b * phi))


def check_boost(params: GupParameters, ctx: Optional[EngineContext] = None) -> Dict[str, bool]:
    """Whether the derived and the printed R satisfy L_R H = 0."""
    ctx = ctx or EngineContext()
    H = gup_field_metric(params)

    def killing(v: VField) -> bool:
        return all(is_zero(c, ctx) for c in lie_derivative_metric(H, v))

    return {"derived": killing(gup_generators(params)["R"]), "printed": killing(published_boost(params))}


@dataclass(frozen=True)
class FourthOrderReduction:
    """
    Scalar fourth-order form obtained by eliminating Phi = Delta Psi.

    ``derived`` is what the Lagrangian produces, with sign ``sign`` in front
    of 2 beta hbar^2 Delta(Delta Psi); ``published`` carries the opposite sign.
    """

    wave_function: sp.Expr
    derived: sp.Expr
    published: sp.Expr
    sign: int
    verified: bool


def _with_derivative_symbols(e: sp.Expr) -> sp.Expr:
    """Replace derivatives of undefined functions by plain symbols so the zero test can sample."""
    atoms = sorted(
        e.atoms(sp.Derivative) | e.atoms(sp.core.function.AppliedUndef), key=sp.default_sort_key
    )
    return e.xreplace({a: sp.Symbol(f"derivative{k}") for k, a in enumerate(atoms)})


def gup_fourth_order(
    g: Metric, params: Optional[GupParameters] = None, ctx: Optional[EngineContext] = None
) -> FourthOrderReduction:
    """
    Substitute Phi = Delta_g Psi into the pair and compare with
    Delta Psi + s 2b Delta(Delta Psi) + V0 Psi.
    """
    params = params or GupParameters.symbolic()
    ctx = ctx or EngineContext()
    system = make_gup_system(g, params, ctx=ctx)
    wave = sp.Function("Psi")(*g.coords)
    lap = laplacian(g, wave)
    lap2 = laplacian(g, lap)

    first, second = system.residuals((wave, lap))
    if not is_zero(_with_derivative_symbols(first), ctx):
        raise CaseError("Phi = Delta Psi does not solve the constraint equation")
    reduced = simplify(2 * params.b * second)

    forms = {s: simplify(lap + s * 2 * params.b * lap2 + params.V0 * wave) for s in (1, -1)}
    sign = next((s for s, form in forms.items() if is_zero(_with_derivative_symbols(reduced - form), ctx)), 0)
    return FourthOrderReduction(wave, forms.get(sign, reduced), forms[-1], sign, sign != 0)


def _require_real(expression: sp.Expr, fixture: Dict[sp.Symbol, sp.Expr], what: str) -> None:
    if not fixture:
        return
    value = sp.N(sp.sympify(expression).xreplace(fixture), 30)
    if value.free_symbols:
        return
    if not value.is_real or value < 0:
        raise CaseError(f"{what} is not real for these parameters", "use the numeric mode or other fixture values")


def gup_minkowski_solution(
    params: Optional[GupParameters] = None,
    c: Optional[sp.Expr] = None,
    constants: Optional[Tuple[sp.Expr, ...]] = None,
    fixture: Optional[Dict[sp.Symbol, sp.Expr]] = None,
) -> FieldSolution:
    """
    Invariant solution for {d_y, d_z, d_t + c Y} on Minkowski space:

        Psi = e^(ct) (c1 e^(mu x) + c2 e^(-mu x) + c3 e^(nu x) + c4 e^(-nu x))

    with mu = sqrt(4c^2 b^2 + b(1 - lambda)) / 2b, nu the same with 1 + lambda.

    Raises:
        CaseError: If mu or nu is complex for the fixture values.
    """
    params = params or GupParameters.symbolic()
    c = sp.Symbol("c") if c is None else sp.sympify(c)
    constants = tuple(constants or sp.symbols("c1:5"))
    fixture = dict(fixture or {})
    b, lam = params.b, params.lam
    t, x = sp.symbols("t x")

    mu_sq = 4 * c ** 2 * b ** 2 + b * (1 - lam)
    nu_sq = 4 * c ** 2 * b ** 2 + b * (1 + lam)
    for value, what in ((1 - 8 * params.V0 * b, "lambda"), (mu_sq / b, "mu"), (nu_sq / b, "nu")):
        _require_real(value, fixture, what)
    mu, nu = sp.sqrt(mu_sq) / (2 * b), sp.sqrt(nu_sq) / (2 * b)
    s_mu, s_nu = params.eigenvalues()

    modes = [
        SolutionMode(constants[0], sp.exp(c * t + mu * x), s_mu),
        SolutionMode(constants[1], sp.exp(c * t - mu * x), s_mu),
        SolutionMode(constants[2], sp.exp(c * t + nu * x), s_nu),
        SolutionMode(constants[3], sp.exp(c * t - nu * x), s_nu),
    ]
    return from_modes(
        "gup-minkowski", sp.symbols("t x y z"), modes, fixture=fixture,
        domain={s: (sp.S.Zero, sp.S.One) for s in sp.symbols("t x y z")},
    )


def z_flow(
    psi: sp.Expr, phi: sp.Expr, epsilon: sp.Expr, params: GupParameters
) -> Tuple[sp.Expr, sp.Expr]:
    """
    Finite transformation generated by Z = (Psi + 2b Phi) d_Psi - V0 Psi d_Phi.
    """
    b, V0, lam = params.b, params.V0, params.lam
    scale = sp.exp((1 - lam) / 2 * epsilon) / (2 * lam)
    grown = sp.exp(epsilon * lam)
    new_psi = scale * ((4 * b * phi + (1 + lam) * psi) * grown - (4 * b * phi + (1 - lam) * psi))
    new_phi = scale * (((lam - 1) * phi - 2 * V0 * psi) * grown + ((1 + lam) * phi + 2 * V0 * psi))
    return new_psi, new_phi


def gup_transform_solution(
    solution: FieldSolution, epsilon: sp.Expr, params: Optional[GupParameters] = None
) -> FieldSolution:
    """Image of a (Psi, Phi) solution under the Z flow with parameter ``epsilon``."""
    params = params or GupParameters.symbolic()
    solution.check_fields(2)
    psi, phi = z_flow(solution.fields[0], solution.fields[1], sp.sympify(epsilon), params)
    modes = tuple(
        SolutionMode(m.constant, sp.exp(params.flow_rate(m.eigenvalue) * epsilon) * m.profile, m.eigenvalue)
        for m in solution.modes
    )
    return FieldSolution(
        f"{solution.name}@Z", solution.x, (psi, phi), mode=solution.mode, modes=modes,
        fixture=solution.fixture, domain=solution.domain, variant=solution.variant,
    )


def transformed_constants(
    solution: FieldSolution, epsilon: sp.Expr, params: Optional[GupParameters] = None, published: bool = False
) -> Dict[sp.Symbol, sp.Expr]:
    """
    Constant map under the Z flow: c -> exp((1 + 2b s) eps) c per mode.

    With ``published`` the map is the eps -> -eps image,
    c1,2 -> exp(-(1+lambda) eps/2) c1,2 and c3,4 -> exp(-(1-lambda) eps/2) c3,4.
    """
    params = params or GupParameters.symbolic()
    sign = -1 if published else 1
    return {
        m.constant: sp.exp(sign * params.flow_rate(m.eigenvalue) * epsilon) * m.constant
        for m in solution.modes
    }


@dataclass(frozen=True)
class TransformCheck:
    derived_map: bool
    published_map: bool
    generates_z: bool
    group_property: bool

    def to_dict(self) -> Dict[str, bool]:
        return {
            "derived_map": self.derived_map,
            "published_map": self.published_map,
            "generates_z": self.generates_z,
            "group_property": self.group_property,
        }


def check_transform(
    solution: FieldSolution,
    params: Optional[GupParameters] = None,
    ctx: Optional[EngineContext] = None,
) -> TransformCheck:
    """
    Compare the transformed solution with the constant maps and check that
    the flow is a one-parameter group generated by Z.
    """
    params = params or GupParameters.symbolic()
    ctx = ctx or EngineContext()
    eps, eps1, eps2 = sp.symbols("epsilon epsilon1 epsilon2")
    moved = gup_transform_solution(solution, eps, params)

    def matches(mapping: Dict[sp.Symbol, sp.Expr]) -> bool:
        target = solution.substitute(mapping)
        return all(is_zero(a - b_, ctx) for a, b_ in zip(moved.fields, target.fields))

    psi, phi = sp.symbols(GUP_FIELDS)
    z = gup_generators(params)["Z"]
    new_psi, new_phi = z_flow(psi, phi, eps, params)
    tangent = [substitute(differentiate(e, eps), {eps: 0}) for e in (new_psi, new_phi)]
    generates = all(is_zero(t - c, ctx) for t, c in zip(tangent, z.components))

    once = z_flow(*z_flow(psi, phi, eps1, params), eps2, params)
    direct = z_flow(psi, phi, eps1 + eps2, params)
    group = all(is_zero(a - b_, ctx) for a, b_ in zip(once, direct))

    return TransformCheck(
        derived_map=matches(transformed_constants(solution, eps, params)),
        published_map=matches(transformed_constants(solution, eps, params, published=True)),
        generates_z=generates,
        group_property=group,
    )


HYPERBOLIC_KINDS = ("X1", "X3", "P")


def hyperbolic_orders(params: GupParameters) -> Tuple[sp.Expr, sp.Expr]:
    """mu_bar = -sqrt(b - 1 - lambda) / 2 sqrt(b), nu_bar the same with + lambda."""
    b, lam = params.b, params.lam
    return -sp.sqrt(b - 1 - lam) / (2 * sp.sqrt(b)), -sp.sqrt(b - 1 + lam) / (2 * sp.sqrt(b))


def gup_hyperbolic_solution(
    kind: str,
    parameter: Optional[sp.Expr] = None,
    params: Optional[GupParameters] = None,
    constants: Optional[Tuple[sp.Expr, ...]] = None,
    published: bool = False,
    fixture: Optional[Dict[sp.Symbol, sp.Expr]] = None,
) -> FieldSolution:
    """
    Invariant solutions on the hyperbolic plane ds^2 = dtheta^2 - e^(2 theta) dphi^2.

    kind X1 (from X1 + alpha Y):
        e^(alpha phi) e^(-theta/2) [b1 K_mu(alpha e^-theta) + b2 I_mu(alpha e^-theta)] + same with nu
    kind X3 (from X3 + sigma Y), with w = 1 - phi^2 e^(2 theta):
        exp(-sigma phi e^(2 theta)/w) (e^theta/w)^(1/2) [b1 K_mu(sigma e^theta/w) + b2 I_mu(...)] + same with nu
    kind P (from X2 + kappa Y), the Ferrers P branch, zeta = phi e^theta:
        (1 - zeta^2)^(-kappa/2) e^(kappa theta) [b1 P^kappa_(-mu-1/2)(zeta) + b3 P^kappa_(-nu-1/2)(zeta)]

    ``published`` selects the printed variants instead: X1 without e^(-theta/2)
    on the second bracket, X3 with argument sigma e^(2 theta)/(phi^2 e^(2 theta) + 1),
    P with (zeta^2 + 1)^(-kappa/2) and e^(kappa theta) on the first bracket only.
    """
    if kind not in HYPERBOLIC_KINDS:
        raise CaseError(f"unknown solution kind '{kind}'", f"expected one of {', '.join(HYPERBOLIC_KINDS)}")
    params = params or GupParameters.symbolic()
    theta, phi = sp.symbols("theta phi")
    mu, nu = hyperbolic_orders(params)
    s_nu, s_mu = params.eigenvalues()
    fixture = dict(fixture or {})
    for order, what in ((mu, "mu_bar"), (nu, "nu_bar")):
        _require_real(order ** 2, fixture, what)
    notes = []

    if kind == "X1":
        alpha = sp.Symbol("alpha") if parameter is None else sp.sympify(parameter)
        z = alpha * sp.exp(-theta)
        front = sp.exp(alpha * phi) * sp.exp(-theta / 2)
        back = sp.exp(alpha * phi) if published else front
        profiles = [
            (front * BesselK(mu, z), s_mu), (front * BesselI(mu, z), s_mu),
            (back * BesselK(nu, z), s_nu), (back * BesselI(nu, z), s_nu),
        ]
        box = (sp.S.Zero, sp.S.One)
    elif kind == "X3":
        sigma = sp.Symbol("sigma") if parameter is None else sp.sympify(parameter)
        if published:
            denominator = phi ** 2 * sp.exp(2 * theta) + 1
            z = sigma * sp.exp(2 * theta) / denominator
            front = sp.exp(sigma * phi * sp.exp(2 * theta) / denominator)
        else:
            w = 1 - phi ** 2 * sp.exp(2 * theta)
            z = sigma * sp.exp(theta) / w
            front = sp.exp(-sigma * phi * sp.exp(2 * theta) / w) * sp.sqrt(sp.exp(theta) / w)
        profiles = [
            (front * BesselK(mu, z), s_mu), (front * BesselI(mu, z), s_mu),
            (front * BesselK(nu, z), s_nu), (front * BesselI(nu, z), s_nu),
        ]
        box = (sp.S.Zero, sp.S.Half)
    else:
        kappa = sp.Symbol("kappa") if parameter is None else sp.sympify(parameter)
        zeta = phi * sp.exp(theta)

        def ferrers(order: sp.Expr) -> sp.Expr:
            degree = -order - sp.S.Half
            return (
                ((1 + zeta) / (1 - zeta)) ** (kappa / 2)
                * Hyp2F1(-degree, degree + 1, 1 - kappa, (1 - zeta) / 2)
                * RGamma(1 - kappa)
            )

        if published:
            front = (zeta ** 2 + 1) ** (-kappa / 2) * sp.exp(kappa * theta)
            back = (zeta ** 2 + 1) ** (-kappa / 2)
        else:
            front = back = (1 - zeta ** 2) ** (-kappa / 2) * sp.exp(kappa * theta)
        profiles = [(front * ferrers(mu), s_mu), (back * ferrers(nu), s_nu)]
        notes.append("second-kind (Q) branch not included")
        box = (sp.S.Zero, sp.S.Half)

    names = ("b1", "b2", "b3", "b4") if kind != "P" else ("b1", "b3")
    constants = tuple(constants or sp.symbols(" ".join(names)))
    modes = [SolutionMode(k, p, s) for k, (p, s) in zip(constants, profiles)]
    return from_modes(
        f"gup-hyperbolic-{kind.lower()}", (theta, phi), modes, mode=EvaluationMode.NUMERIC,
        fixture=fixture, domain={theta: box, phi: box},
        variant="published" if published else "derived", notes=tuple(notes),
    )


def _named_generators(system: QuasilinearSystem, params: GupParameters) -> Dict[str, Generator]:
    zeros = [0] * system.n
    return {
        name: Generator(system.x, system.u, zeros, field.components, name)
        for name, field in gup_generators(params).items()
    }


def _z_asymmetry(system: QuasilinearSystem, params: GupParameters, ctx: EngineContext) -> Dict[str, bool]:
    z = _named_generators(system, params)["Z"]
    return {
        "lie": bool(check_lie_condition(system, z, ctx)),
        "noether": bool(check_noether_condition(system.g, system.H, system.V, z, ctx=ctx)),
    }


def _fixture(**values) -> Dict[sp.Symbol, sp.Expr]:
    return {sp.Symbol(k): sp.Rational(v) for k, v in values.items()}


# beta hbar^2 = 1/100, V0 = 1, c = 1, lambda = sqrt(23/25)
MINKOWSKI_FIXTURE = _fixture(beta="1/100", hbar=1, V0=1, c=1, c1=1, c2="1/2", c3=-1, c4=2)

# beta hbar^2 = 3, V0 = 1/32: lambda = 1/2, mu_bar^2 = 1/8, nu_bar^2 = 5/24
HYPERBOLIC_FIXTURE = _fixture(beta=3, hbar=1, V0="1/32", b1=1, b2="1/2", b3=-1, b4=2)
HYPERBOLIC_PARAMETERS = {"X1": sp.S.One, "X3": sp.S.One, "P": sp.Rational(1, 3)}


class GupMinkowskiCase(BaseCase):
    NAME = "gup-minkowski"
    DISPLAY_NAME = "GUP Klein-Gordon pair on Minkowski space"
    DESCRIPTION = "Psi, Phi = Delta Psi over M^4 with H = [[1, 2b], [2b, 0]]"
    BOUND_CASE = "gup"
    LIE_REFERENCE = 13
    NOETHER_REFERENCE = 12

    params = GupParameters.symbolic()

    def build(self) -> QuasilinearSystem:
        return make_gup_system(minkowski_metric(), self.params, name=self.NAME, ctx=self.ctx)

    def solutions(self) -> List[FieldSolution]:
        return [gup_minkowski_solution(self.params, fixture=MINKOWSKI_FIXTURE)]

    def generators(self) -> Dict[str, Generator]:
        return _named_generators(self.system, self.params)

    def checks(self) -> Dict[str, Any]:
        reduction = gup_fourth_order(self.system.g, self.params, self.ctx)
        transform = check_transform(self.solutions()[0], self.params, self.ctx)
        if transform.derived_map and not transform.published_map:
            self.logger.warning("published constant map is the eps -> -eps image of the Z flow")
        return {
            "fourth_order": {"sign": reduction.sign, "verified": reduction.verified},
            "transform": transform.to_dict(),
            "z_generator": _z_asymmetry(self.system, self.params, self.ctx),
            "boost": check_boost(self.params, self.ctx),
        }


class GupHyperbolicCase(BaseCase):
    NAME = "gup-hyperbolic"
    DISPLAY_NAME = "GUP Klein-Gordon pair on the hyperbolic plane"
    DESCRIPTION = "Psi, Phi over ds^2 = dtheta^2 - e^(2 theta) dphi^2"
    BOUND_CASE = "gup"
    LIE_REFERENCE = 6
    NOETHER_REFERENCE = 5

    params = GupParameters.symbolic()

    def build(self) -> QuasilinearSystem:
        return make_gup_system(hyperbolic_metric(), self.params, name=self.NAME, ctx=self.ctx)

    def solutions(self) -> List[FieldSolution]:
        return [
            gup_hyperbolic_solution(
                kind, HYPERBOLIC_PARAMETERS[kind], self.params, published=published, fixture=HYPERBOLIC_FIXTURE
            )
            for kind in HYPERBOLIC_KINDS
            for published in (False, True)
        ]

    def generators(self) -> Dict[str, Generator]:
        return _named_generators(self.system, self.params)

    def checks(self) -> Dict[str, Any]:
        reduction = gup_fourth_order(self.system.g, self.params, self.ctx)
        return {
            "fourth_order": {"sign": reduction.sign, "verified": reduction.verified},
            "z_generator": _z_asymmetry(self.system, self.params, self.ctx),
            "boost": check_boost(self.params, self.ctx),
        }


CaseRegistry.register(GupMinkowskiCase)
CaseRegistry.register(GupHyperbolicCase)
