# 설계 방향 및 원칙:
# - 핵심 책임: 정수 다항식 대수 (원분다항식 판정, 비율 종결식에 의한 퇴화 판정, 근 분리, θ₁의 최소다항식)를 제공합니다.
# - 설계 원칙: 수치 계산은 후보를 찾는 데에만 사용하며, 모든 결과는 정확한 나눗셈으로 검증합니다.
# - 기술적 고려사항: 다항식 연산은 sympy.Poly, 근 분리는 mpmath 컨텍스트에서의 Aberth–Ehrlich 반복을 사용합니다.
#                 퇴화/원분 검사는 특성다항식 계수를 키로 캐시합니다.
# - 사용 시 고려사항: 차수 12 정도까지를 대상으로 합니다.

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm

import mpmath
import sympy

from specto.errors import InputError, PrecisionError
from specto.linalg import IntMatrix, IntPoly, char_poly
from specto.settings.config import Settings

from .const import ABERTH_MAX_STEPS, GUARD_DIGITS, IMAG_TOLERANCE
from .schema import RootBox

logger = logging.getLogger(__name__)

x, y = sympy.symbols("x y")


@lru_cache(maxsize=512)
def _cyclotomic_poly(k: int) -> sympy.Poly:
    result = sympy.Poly(x**k - 1, x, domain=sympy.ZZ)
    for d in sympy.divisors(k):
        if d < k:
            result = result.exquo(_cyclotomic_poly(d))
    return result


def cyclotomic(k: int) -> IntPoly:
    """
    xᵏ − 1 을 진약수 d에 대한 Φ_d 로 차례로 나누어 k번째 원분다항식을 구합니다.

    Args:
        k (int): 1 이상의 정수.

    Returns:
        IntPoly: Φ_k.
    """
    if k < 1:
        logger.error(f"cyclotomic polynomial requested for k = {k}")
        raise InputError(f"cyclotomic index must be positive, got {k}")
    return IntPoly.from_sympy(_cyclotomic_poly(k))


def _candidate_orders(degree: int) -> list[int]:
    # φ(k) ≤ D 이면 k ≤ 2D² + 2
    return [k for k in range(1, 2 * degree * degree + 3) if sympy.totient(k) <= degree]


@lru_cache(maxsize=4096)
def _unit_root_orders(coefficients: tuple[int, ...]) -> tuple[int, ...]:
    p = IntPoly(coefficients).poly
    return tuple(k for k in _candidate_orders(p.degree()) if p.gcd(_cyclotomic_poly(k)).degree() > 0)


def has_unit_root(p: IntPoly) -> int | None:
    """
    p가 1의 거듭제곱근을 근으로 갖는지 확인합니다.

    Returns:
        int | None: gcd(p, Φ_k)가 자명하지 않은 가장 작은 k. 없으면 None.
    """
    if p.is_zero():
        logger.error("has_unit_root called with the zero polynomial")
        raise InputError("polynomial must be non-zero")
    orders = _unit_root_orders(p.coefficients)
    return orders[0] if orders else None


def ratio_polynomial(p: IntPoly) -> sympy.Poly:
    """
    서로 다른 0이 아닌 근들의 비율을 근으로 갖는 정수 다항식 R̂ 을 구합니다.

    p*를 p의 squarefree 부분 (x 인수 제거)이라 할 때 R(x) = Res_y(p*(y), p*(xy)) 에서
    (x − 1)^{deg p*} 를 정확히 나누어 얻습니다.
    """
    p_star = p.poly.sqf_part()
    while p_star.degree() > 0 and p_star.eval(0) == 0:
        p_star = p_star.exquo(sympy.Poly(x, x, domain=sympy.ZZ))
    n = p_star.degree()
    if n < 2:
        return sympy.Poly(1, x, domain=sympy.ZZ)
    f = p_star.as_expr()
    R = sympy.Poly(sympy.resultant(f.subs(x, y), f.subs(x, x * y), y), x, domain=sympy.ZZ)
    return R.exquo(sympy.Poly((x - 1) ** n, x, domain=sympy.ZZ))


@lru_cache(maxsize=4096)
def _ratio_orders(coefficients: tuple[int, ...]) -> tuple[int, ...]:
    R = ratio_polynomial(IntPoly(coefficients))
    if R.degree() < 1:
        return ()
    return tuple(k for k in _candidate_orders(R.degree()) if R.gcd(_cyclotomic_poly(k)).degree() > 0)


def is_degenerate(A: IntMatrix) -> int | None:
    """
    서로 다른 두 고유값의 비가 1의 거듭제곱근인지 판정합니다.

    Args:
        A (IntMatrix): 0이 아닌 정수 행렬.

    Returns:
        int | None: 그러한 비의 가장 작은 위수 k. 비퇴화이면 None.
    """
    if A.is_zero():
        logger.error("is_degenerate called with the zero matrix")
        raise InputError("matrix must be non-zero")
    orders = _ratio_orders(char_poly(A).coefficients)
    return orders[0] if orders else None


def nondegenerate_power(A: IntMatrix) -> int:
    """
    A^k가 비퇴화가 되는 가장 작은 k (발견된 모든 비 위수의 최소공배수)를 구합니다.
    """
    if A.is_zero():
        return 1
    orders = _ratio_orders(char_poly(A).coefficients)
    return lcm(*orders) if orders else 1


def roots_numeric(p: IntPoly, target_precision: int | None = None) -> list[RootBox]:
    """
    squarefree 정수 다항식의 모든 근을 서로소인 원판으로 분리합니다.

    Aberth–Ehrlich 반복 후 각 근 z에 반지름 n·|p(z)/p'(z)| 인 포함 원판을 부여하고
    원판들이 서로소인지 확인합니다. 유리근은 정확한 값과 반지름 0으로 보고합니다.

    Args:
        p (IntPoly): squarefree 다항식 (호출 측에서 squarefree화).
        target_precision (int | None): 요구 10진 자릿수. 기본값은 SPECTO_ROOT_DPS.

    Returns:
        list[RootBox]: 근마다 하나의 원판. 가장 큰 양의 실근에 is_perron이 표시됩니다.
    """
    digits = target_precision or Settings.SPECTO_ROOT_DPS
    n = p.degree
    if n < 1:
        return []
    ctx = mpmath.MPContext()
    ctx.dps = digits + GUARD_DIGITS
    coeffs = [ctx.mpf(c) for c in reversed(p.coefficients)]
    lc = p.leading

    if n == 1:
        root = Fraction(-p.coefficients[0], lc)
        return _flag_perron([RootBox(ctx.mpf(root.numerator) / root.denominator, ctx.mpf(0), ctx.mpf(0), exact=root)])

    z = _aberth(ctx, coeffs, n, digits)

    boxes: list[RootBox] = []
    for zk in z:
        value, derivative = ctx.polyval(coeffs, zk, derivative=True)
        if derivative == 0:
            raise PrecisionError("derivative vanishes at an approximate root; is the polynomial squarefree?")
        radius = n * abs(value / derivative)
        re, im = ctx.re(zk), ctx.im(zk)
        if abs(im) <= radius:
            im = ctx.mpf(0)
            candidate = Fraction(int(ctx.nint(re * lc)), lc)
            if p(candidate) == 0:
                boxes.append(RootBox(ctx.mpf(candidate.numerator) / candidate.denominator, im, ctx.mpf(0), exact=candidate))
                continue
        boxes.append(RootBox(re, im, radius))

    tolerance = ctx.mpf(10) ** (-digits)
    worst = max(b.radius / max(1, abs(ctx.mpc(b.center_re, b.center_im))) for b in boxes)
    if worst > tolerance:
        logger.error(f"root isolation stopped at relative radius {worst}")
        raise PrecisionError(f"root isolation did not reach 1e-{digits}", achieved_radius=float(worst))
    for i, j in combinations(range(n), 2):
        gap = abs(ctx.mpc(boxes[i].center_re, boxes[i].center_im) - ctx.mpc(boxes[j].center_re, boxes[j].center_im))
        if gap <= boxes[i].radius + boxes[j].radius:
            logger.error(f"root boxes {i} and {j} overlap (gap {gap})")
            raise PrecisionError("root boxes are not disjoint", achieved_radius=float(worst))
    return _flag_perron(boxes)


def _aberth(ctx: mpmath.MPContext, coeffs: list, n: int, digits: int) -> list:
    lead = abs(coeffs[0])
    radius = max(ctx.mpf(1), (abs(coeffs[-1]) / lead) ** (ctx.mpf(1) / n)) if coeffs[-1] != 0 else ctx.mpf(1)
    z = [radius * ctx.expj(2 * ctx.pi * k / n + ctx.mpf("0.4")) for k in range(n)]
    tolerance = ctx.mpf(10) ** (-(digits + GUARD_DIGITS // 2))
    for _ in range(ABERTH_MAX_STEPS):
        largest = ctx.mpf(0)
        for k in range(n):
            value, derivative = ctx.polyval(coeffs, z[k], derivative=True)
            if value == 0:
                continue
            if derivative == 0:
                z[k] += tolerance
                continue
            ratio = value / derivative
            repulsion = ctx.fsum(1 / (z[k] - z[j]) for j in range(n) if j != k)
            correction = ratio / (1 - ratio * repulsion)
            z[k] -= correction
            largest = max(largest, abs(correction) / max(1, abs(z[k])))
        if largest < tolerance:
            break
    return z


def _flag_perron(boxes: list[RootBox]) -> list[RootBox]:
    moduli = [abs(b.center) for b in boxes]
    top = max(moduli)
    candidates = [i for i, b in enumerate(boxes) if b.is_real and b.center_re > 0 and moduli[i] >= top - float(b.radius) - 1e-12]
    if not candidates:
        return boxes
    best = max(candidates, key=lambda i: boxes[i].center_re)
    flagged = boxes[best]
    boxes[best] = RootBox(flagged.center_re, flagged.center_im, flagged.radius, flagged.exact, is_perron=True)
    return boxes


def minimal_poly_of_root(p: IntPoly, box: RootBox) -> IntPoly:
    """
    box 안의 근을 갖는 p의 기약 정수 인수를 구합니다.

    box의 근을 포함하는 근 부분집합을 작은 것부터 열거하여 곱 다항식의 계수를 반올림하고,
    p를 정확히 나누는 첫 후보를 반환합니다.

    Raises:
        PrecisionError: 어떤 후보도 검증되지 않은 경우 (정밀도를 높여야 함).
    """
    squarefree = IntPoly.from_sympy(p.poly.sqf_part())
    target_field = p.poly.to_field()
    if box.exact is not None:
        q = box.exact
        linear = IntPoly((-q.numerator, q.denominator))
        if target_field.rem(linear.poly.to_field()).is_zero:
            return linear
    roots = roots_numeric(squarefree)
    target = min(range(len(roots)), key=lambda i: abs(roots[i].center - box.center))
    if roots[target].exact is not None:
        q = roots[target].exact
        return IntPoly((-q.numerator, q.denominator))

    ctx = mpmath.MPContext()
    ctx.dps = Settings.SPECTO_ROOT_DPS
    points = [ctx.mpc(r.center_re, r.center_im) for r in roots]
    others = [i for i in range(len(roots)) if i != target]
    multipliers = sympy.divisors(abs(squarefree.leading))
    for size in range(0, len(others) + 1):
        for chosen in combinations(others, size):
            product = [ctx.mpc(1)]
            for i in (target, *chosen):
                product = _times_linear(product, points[i])
            if any(abs(ctx.im(c)) > IMAG_TOLERANCE * max(1, abs(c)) for c in product):
                continue
            for multiplier in multipliers:
                coefficients = [int(ctx.nint(ctx.re(c) * multiplier)) for c in reversed(product)]
                candidate = IntPoly(tuple(coefficients))
                if candidate.degree != size + 1:
                    continue
                if target_field.rem(candidate.poly.to_field()).is_zero:
                    primitive = candidate.poly.primitive()[1]
                    if primitive.LC() < 0:
                        primitive = -primitive
                    logger.debug(f"minimal polynomial {primitive.as_expr()} found among {size + 1}-root subsets")
                    return IntPoly.from_sympy(primitive)
    logger.error("no root subset reconstructs an exact factor")
    raise PrecisionError("minimal polynomial reconstruction failed; increase SPECTO_ROOT_DPS")


def _times_linear(coefficients: list, root) -> list:
    # (high-first) · (x − root)
    result = coefficients + [0]
    for i in range(1, len(result)):
        result[i] -= root * coefficients[i - 1]
    return result
