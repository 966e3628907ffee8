"""
절단 형식 멱급수와 q-Pochhammer 곱
정수 계수 급수를 q^{N+1} 이하에서 정확하게 다룹니다.

계수는 Python 정수(임의 정밀도)이므로 오버플로가 생기지 않습니다.
생성함수와 정리의 양변은 식에 적힌 모양 그대로 만들고, 서로 공유하는 단순화는 하지 않습니다.
"""

from enum import Enum
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .errors import SeriesError

GeneratingFunction = Callable[[int], "Series"]


class Series(BaseModel):
    """
    q^{order+1} 에서 절단한 정수 계수 멱급수
    coeffs[k]는 q^k의 계수이고 길이는 항상 order+1입니다.
    """
    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=0, description="절단 차수 N")
    coeffs: Tuple[int, ...] = Field(description="q^0..q^N 계수")

    @model_validator(mode="after")
    def _check_length(self) -> "Series":
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"계수 길이 {len(self.coeffs)}가 order+1={self.order + 1}과 다릅니다")
        return self

    def coefficient(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise SeriesError(f"차수 {k}는 [0, {self.order}] 밖입니다")
        return self.coeffs[k]

    def shift(self, k: int) -> "Series":
        """q^k 를 곱하고 절단"""
        if k < 0:
            raise SeriesError(f"음의 이동은 허용되지 않습니다: {k}")
        if k > self.order:
            return _zero(self.order)
        return _build(self.order, [0] * k + list(self.coeffs[: self.order + 1 - k]))

    def truncate(self, order: int) -> "Series":
        if not 0 <= order <= self.order:
            raise SeriesError(f"절단 차수 {order}는 [0, {self.order}] 밖입니다")
        return _build(order, self.coeffs[: order + 1])

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return add(self, -other)

    def __neg__(self) -> "Series":
        return _build(self.order, [-c for c in self.coeffs])

    def __mul__(self, other: Union["Series", int]) -> "Series":
        if isinstance(other, int):
            return _build(self.order, [other * c for c in self.coeffs])
        return mul(self, other)

    def __rmul__(self, other: int) -> "Series":
        return self.__mul__(other)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs)


def _build(order: int, coeffs: Sequence[int]) -> Series:
    # 내부 연산은 길이를 보장하므로 검증을 생략
    return Series.model_construct(order=order, coeffs=tuple(coeffs))


def _zero(order: int) -> Series:
    return _build(order, [0] * (order + 1))


def _check_order(order: int) -> None:
    if order < 0:
        raise SeriesError(f"절단 차수는 0 이상이어야 합니다: {order}")


def _check_same_order(a: Series, b: Series) -> None:
    if a.order != b.order:
        raise SeriesError(f"절단 차수가 다릅니다: {a.order} != {b.order}")


def series_const(c: int, order: int) -> Series:
    """상수 급수 c"""
    _check_order(order)
    return _build(order, [c] + [0] * order)


def series_monomial(c: int, k: int, order: int) -> Series:
    """단항식 c·q^k"""
    _check_order(order)
    if not 0 <= k <= order:
        raise SeriesError(f"지수 {k}는 [0, {order}] 밖입니다")
    coeffs = [0] * (order + 1)
    coeffs[k] = c
    return _build(order, coeffs)


def _monomial_or_zero(c: int, k: int, order: int) -> Series:
    # 절단 차수를 넘는 항은 0
    if k > order:
        return _zero(order)
    return series_monomial(c, k, order)


def add(a: Series, b: Series) -> Series:
    """계수별 합"""
    _check_same_order(a, b)
    return _build(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])


def mul(a: Series, b: Series) -> Series:
    """N에서 절단한 Cauchy 곱"""
    _check_same_order(a, b)
    order = a.order
    out = [0] * (order + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j in range(order - i + 1):
            out[i + j] += ai * bc[j]
    return _build(order, out)


def invert(a: Series) -> Series:
    """
    상수항이 ±1인 급수의 역원
    b_0 = 1/a_0, b_k = -(1/a_0)·Σ_{j=1..k} a_j b_{k-j}

    Raises:
        SeriesError: 상수항이 ±1이 아닐 때 (0이면 이 절단에서 역원이 없음)
    """
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise SeriesError(f"상수항 {a0}는 정수 범위에서 가역이 아닙니다")
    nonzero = [(j, c) for j, c in enumerate(a.coeffs) if j and c]
    b = [0] * (a.order + 1)
    b[0] = a0
    for k in range(1, a.order + 1):
        total = 0
        for j, c in nonzero:
            if j > k:
                break
            total += c * b[k - j]
        # 1/a0 == a0
        b[k] = -a0 * total
    return _build(a.order, b)


class PochhammerSpec(BaseModel):
    """
    (±q^a; q^b)_len = ∏_{j=0}^{len-1} (1 - sign·q^{a+jb})
    length가 None이면 무한곱이며, 절단 차수를 넘는 인자는 1이므로 생략합니다.
    """
    model_config = ConfigDict(frozen=True)

    sign: int = Field(default=1, description="+1 이면 (q^a;q^b), -1 이면 (-q^a;q^b)")
    offset: int = Field(ge=1, description="첫 지수 a")
    step: int = Field(ge=1, description="지수 간격 b")
    length: Optional[int] = Field(default=None, ge=0, description="인자 개수 (None = 무한)")

    @field_validator("sign")
    @classmethod
    def _check_sign(cls, value: int) -> int:
        if value not in (1, -1):
            raise ValueError(f"sign은 +1 또는 -1이어야 합니다: {value}")
        return value


INFINITY = None


def pochhammer(spec: PochhammerSpec, order: int) -> Series:
    """절단 q-Pochhammer 곱"""
    _check_order(order)
    result = [1] + [0] * order
    j = 0
    while spec.length is None or j < spec.length:
        exponent = spec.offset + j * spec.step
        if exponent > order:
            break
        # (1 - sign·q^e) 곱: 높은 차수부터 갱신
        for k in range(order, exponent - 1, -1):
            result[k] -= spec.sign * result[k - exponent]
        j += 1
    return _build(order, result)


def qpoch(sign: int, offset: int, step: int, length: Optional[int], order: int) -> Series:
    return pochhammer(PochhammerSpec(sign=sign, offset=offset, step=step, length=length), order)


def pentagonal_exponents(order: int) -> List[Tuple[int, int]]:
    """k(3k±1)/2 <= order 인 (지수, (-1)^k) 목록, 지수 오름차순"""
    _check_order(order)
    terms = [(0, 1)]
    k = 1
    while k * (3 * k - 1) // 2 <= order:
        sign = -1 if k % 2 else 1
        for exponent in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if exponent <= order:
                terms.append((exponent, sign))
        k += 1
    return sorted(terms)


# ---------------------------------------------------------------------------
# 생성함수
# ---------------------------------------------------------------------------

def gf_ped(order: int) -> Series:
    """(-q^2;q^2)_∞ / (q;q^2)_∞"""
    return mul(qpoch(-1, 2, 2, INFINITY, order), invert(qpoch(1, 1, 2, INFINITY, order)))


def gf_4regular(order: int) -> Series:
    """(q^4;q^4)_∞ / (q;q)_∞"""
    return mul(qpoch(1, 4, 4, INFINITY, order), invert(qpoch(1, 1, 1, INFINITY, order)))


def _de_sum(
    order: int,
    degree: Callable[[int], int],
    denominator_length: Callable[[int], int],
) -> Series:
    """
    Σ_n (-q^2;q^2)_n q^{degree(n)} / (q;q^2)_{denominator_length(n)}

    분자와 분모의 역수 모두 상수항이 1이므로 n번째 항의 최저 차수는 degree(n)이고,
    degree(n) > order 가 되면 합을 멈춥니다.
    """
    _check_order(order)
    total = _zero(order)
    n = 0
    while degree(n) <= order:
        numerator = qpoch(-1, 2, 2, n, order).shift(degree(n))
        denominator = qpoch(1, 1, 2, denominator_length(n), order)
        total = total + mul(numerator, invert(denominator))
        n += 1
    return total


def gf_de1(order: int) -> Series:
    """Σ (-q^2;q^2)_n q^{2n+1} / (q;q^2)_{n+1}"""
    return _de_sum(order, lambda n: 2 * n + 1, lambda n: n + 1)


def gf_de2(order: int) -> Series:
    """Σ (-q^2;q^2)_n q^{4n+2} / (q;q^2)_{n+1}"""
    return _de_sum(order, lambda n: 4 * n + 2, lambda n: n + 1)


def gf_de3(order: int) -> Series:
    """Σ (-q^2;q^2)_n q^{2n+1} / (q;q^2)_n"""
    return _de_sum(order, lambda n: 2 * n + 1, lambda n: n)


DEFAULT_GENERATING_FUNCTIONS: Dict[str, GeneratingFunction] = {
    "ped": gf_ped,
    "4regular": gf_4regular,
    "de1": gf_de1,
    "de2": gf_de2,
    "de3": gf_de3,
}


class Theorem(str, Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"


def _one_plus(k: int, order: int) -> Series:
    """1 + q^k"""
    return series_const(1, order) + _monomial_or_zero(1, k, order)


def theorem_lhs(
    which: Theorem,
    order: int,
    generating_functions: Optional[Mapping[str, GeneratingFunction]] = None,
) -> Series:
    """
    T1: (1+q)·Σ DE1,  T2: (1+q^3)·Σ DE2,  T3: (1+q^3)·Σ DE3

    Args:
        which: T1, T2, T3
        order: 절단 차수
        generating_functions: 생성함수 대체 (결함 주입 테스트용)
    """
    _check_order(order)
    gfs = {**DEFAULT_GENERATING_FUNCTIONS, **(generating_functions or {})}
    which = Theorem(which)
    if which == Theorem.T1:
        return mul(_one_plus(1, order), gfs["de1"](order))
    if which == Theorem.T2:
        return mul(_one_plus(3, order), gfs["de2"](order))
    return mul(_one_plus(3, order), gfs["de3"](order))


def theorem_rhs(
    which: Theorem,
    order: int,
    generating_functions: Optional[Mapping[str, GeneratingFunction]] = None,
) -> Series:
    """
    T1: (q^4;q^4)_∞/(q;q)_∞ - 1
    T2: (q^4;q^4)_∞/(q^2;q)_∞ - 1
    T3: q^2·(q^4;q^4)_∞/(q;q)_∞ - q^2 + q
    """
    _check_order(order)
    gfs = {**DEFAULT_GENERATING_FUNCTIONS, **(generating_functions or {})}
    one = series_const(1, order)
    which = Theorem(which)
    if which == Theorem.T1:
        return gfs["4regular"](order) - one
    if which == Theorem.T2:
        return mul(qpoch(1, 4, 4, INFINITY, order), invert(qpoch(1, 2, 1, INFINITY, order))) - one
    return (
        gfs["4regular"](order).shift(2)
        - _monomial_or_zero(1, 2, order)
        + _monomial_or_zero(1, 1, order)
    )


def theorem_sides(
    which: Theorem,
    order: int,
    generating_functions: Optional[Mapping[str, GeneratingFunction]] = None,
) -> Tuple[Series, Series]:
    """정리의 (좌변, 우변)을 각각 식 그대로 만듭니다."""
    return (
        theorem_lhs(which, order, generating_functions),
        theorem_rhs(which, order, generating_functions),
    )


def _side(which: Theorem, side: Callable[..., Series]) -> GeneratingFunction:
    return lambda order: side(which, order)


SERIES_EXPRESSIONS: Dict[str, GeneratingFunction] = {
    **DEFAULT_GENERATING_FUNCTIONS,
    "t1-lhs": _side(Theorem.T1, theorem_lhs),
    "t1-rhs": _side(Theorem.T1, theorem_rhs),
    "t2-lhs": _side(Theorem.T2, theorem_lhs),
    "t2-rhs": _side(Theorem.T2, theorem_rhs),
    "t3-lhs": _side(Theorem.T3, theorem_lhs),
    "t3-rhs": _side(Theorem.T3, theorem_rhs),
}


def build_expression(name: str, order: int) -> Series:
    """CLI 이름으로 급수를 만듭니다."""
    try:
        builder = SERIES_EXPRESSIONS[name]
    except KeyError:
        raise SeriesError(f"알 수 없는 급수 이름: {name}") from None
    return builder(order)
