"""
항등식 검증 오케스트레이터
열거(partitions), 전단사(bijections), 급수(qseries) 세 경로로 각 항등식을 검사하고
IdentityReport를 만듭니다.
"""

import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .bijections import MAPS, Bijection, verify_bijection_layer
from .config import VerifyConfig
from .console import log
from .errors import IncompatibleMethodError, InvalidBoundError
from .models import IdentityId, IdentityReport, Method, Witness
from .partitions import PartitionClass, count_class, count_four_regular_gt1
from .qseries import (
    DEFAULT_GENERATING_FUNCTIONS,
    GeneratingFunction,
    Series,
    Theorem,
    series_const,
    series_monomial,
    theorem_lhs,
    theorem_rhs,
)

CountFunction = Callable[[int, PartitionClass], int]

COMPATIBLE_METHODS: Dict[IdentityId, Tuple[Method, ...]] = {
    IdentityId.EQ_1_1: (Method.ENUMERATION, Method.SERIES, Method.CROSS),
    IdentityId.T1: (Method.SERIES,),
    IdentityId.T2: (Method.SERIES,),
    IdentityId.T3: (Method.SERIES,),
    IdentityId.LEMMA_2_1: (Method.ENUMERATION, Method.BIJECTION),
    IdentityId.LEMMA_2_2: (Method.ENUMERATION, Method.BIJECTION),
    IdentityId.LEMMA_2_3: (Method.ENUMERATION,),
    IdentityId.GF_DE1: (Method.CROSS, Method.SERIES),
    IdentityId.GF_DE2: (Method.CROSS, Method.SERIES),
    IdentityId.GF_DE3: (Method.CROSS, Method.SERIES),
}

# verify_all이 실행하는 기본 검증 목록 (순서 고정)
DEFAULT_MATRIX: Tuple[Tuple[IdentityId, Method], ...] = (
    (IdentityId.EQ_1_1, Method.ENUMERATION),
    (IdentityId.EQ_1_1, Method.SERIES),
    (IdentityId.EQ_1_1, Method.CROSS),
    (IdentityId.T1, Method.SERIES),
    (IdentityId.T2, Method.SERIES),
    (IdentityId.T3, Method.SERIES),
    (IdentityId.LEMMA_2_1, Method.ENUMERATION),
    (IdentityId.LEMMA_2_1, Method.BIJECTION),
    (IdentityId.LEMMA_2_2, Method.ENUMERATION),
    (IdentityId.LEMMA_2_2, Method.BIJECTION),
    (IdentityId.LEMMA_2_3, Method.ENUMERATION),
    (IdentityId.GF_DE1, Method.CROSS),
    (IdentityId.GF_DE2, Method.CROSS),
    (IdentityId.GF_DE3, Method.CROSS),
)

_GF_CLASSES: Dict[IdentityId, Tuple[str, PartitionClass]] = {
    IdentityId.GF_DE1: ("de1", PartitionClass.DE1),
    IdentityId.GF_DE2: ("de2", PartitionClass.DE2),
    IdentityId.GF_DE3: ("de3", PartitionClass.DE3),
}

# 한 n에서 비교할 (설명, 좌변, 우변, 시작 n)
Link = Tuple[str, Callable[[int], int], Callable[[int], int], int]


def bound_for(method: Method, bound_enum: int, bound_series: int) -> int:
    """SERIES는 급수 차수, 나머지는 열거 범위를 사용"""
    return bound_series if method == Method.SERIES else bound_enum


class CountTable:
    """
    개수 표 0..n_max 를 감싼 읽기 전용 조회 함수
    n < 0 이면 0을 돌려줍니다.
    """

    def __init__(self, values: Tuple[int, ...]) -> None:
        self.values = values

    def __call__(self, n: int) -> int:
        if n < 0:
            return 0
        return self.values[n]


class Verifier:
    """
    항등식 검증기

    count, generating_functions, maps로 각 경로를 바꿔 끼울 수 있으므로
    한 경로를 오염시키면 그 경로에 의존하는 보고서만 실패합니다.
    """

    def __init__(
        self,
        count: Optional[CountFunction] = None,
        generating_functions: Optional[Mapping[str, GeneratingFunction]] = None,
        maps: Optional[Mapping[str, Callable]] = None,
        verbose: bool = False,
    ) -> None:
        self.count = count or count_class
        self.generating_functions: Dict[str, GeneratingFunction] = {
            **DEFAULT_GENERATING_FUNCTIONS,
            **(generating_functions or {}),
        }
        self.maps: Dict[str, Callable] = {**MAPS, **(maps or {})}
        self.verbose = verbose
        # 클래스별 개수 표. 더 긴 표가 필요할 때만 새 튜플로 교체하고, 만든 튜플은 바꾸지 않음
        self._counts: Dict[str, Tuple[int, ...]] = {}
        self._counts_lock = threading.Lock()
        self._handlers: Dict[Tuple[IdentityId, Method], Callable[[int], IdentityReport]] = {
            (IdentityId.EQ_1_1, Method.ENUMERATION): self._eq_1_1_enumeration,
            (IdentityId.EQ_1_1, Method.SERIES): self._eq_1_1_series,
            (IdentityId.EQ_1_1, Method.CROSS): self._eq_1_1_cross,
            (IdentityId.T1, Method.SERIES): lambda bound: self._theorem(IdentityId.T1, bound),
            (IdentityId.T2, Method.SERIES): lambda bound: self._theorem(IdentityId.T2, bound),
            (IdentityId.T3, Method.SERIES): lambda bound: self._theorem(IdentityId.T3, bound),
            (IdentityId.LEMMA_2_1, Method.ENUMERATION): self._lemma_2_1_enumeration,
            (IdentityId.LEMMA_2_1, Method.BIJECTION): lambda bound: self._bijection(
                IdentityId.LEMMA_2_1, Bijection.PHI1, bound
            ),
            (IdentityId.LEMMA_2_2, Method.ENUMERATION): self._lemma_2_2_enumeration,
            (IdentityId.LEMMA_2_2, Method.BIJECTION): lambda bound: self._bijection(
                IdentityId.LEMMA_2_2, Bijection.PHI3, bound
            ),
            (IdentityId.LEMMA_2_3, Method.ENUMERATION): self._lemma_2_3_enumeration,
        }
        for identity in _GF_CLASSES:
            self._handlers[(identity, Method.CROSS)] = (
                lambda bound, identity=identity: self._gf_cross(identity, bound)
            )
            self._handlers[(identity, Method.SERIES)] = (
                lambda bound, identity=identity: self._gf_series(identity, bound)
            )

    # ------------------------------------------------------------------
    # 공개 API
    # ------------------------------------------------------------------

    def verify_identity(self, identity: IdentityId, bound: int, method: Method) -> IdentityReport:
        """
        항등식 하나를 bound까지 검사합니다.

        Args:
            identity: 항등식 ID
            bound: n 또는 계수 차수의 상한 (1 이상)
            method: 검증 경로

        Raises:
            InvalidBoundError: bound < 1, 또는 SERIES가 아닌데 MAX_ENUM_BOUND 초과
            IncompatibleMethodError: (identity, method) 조합이 허용되지 않을 때
        """
        identity, method = IdentityId(identity), Method(method)
        if bound < 1:
            raise InvalidBoundError(f"bound는 1 이상이어야 합니다: {bound}")
        if method != Method.SERIES and bound > VerifyConfig.MAX_ENUM_BOUND:
            raise InvalidBoundError(
                f"열거 범위 {bound}는 상한 {VerifyConfig.MAX_ENUM_BOUND}을 넘습니다 (급수 차수에는 상한 없음)"
            )
        if method not in COMPATIBLE_METHODS[identity]:
            allowed = ", ".join(m.value for m in COMPATIBLE_METHODS[identity])
            raise IncompatibleMethodError(
                f"{identity.value}에는 {method.value}를 쓸 수 없습니다 (허용: {allowed})"
            )
        if self.verbose:
            log("Verifier", f"{identity.value}/{method.value} 검사 시작 (bound={bound})")
        report = self._handlers[(identity, method)](bound)
        if self.verbose:
            lo, hi = report.range_checked
            log("Verifier", f"{identity.value}/{method.value} [{lo}, {hi}] {report.verdict.value.upper()}")
        return report

    def verify_all(
        self,
        bound_enum: int,
        bound_series: int,
        max_workers: int = 1,
        matrix: Sequence[Tuple[IdentityId, Method]] = DEFAULT_MATRIX,
    ) -> List[IdentityReport]:
        """
        기본 검증 목록 전체를 실행합니다. 결과 순서는 matrix 순서와 같습니다.

        Args:
            bound_enum: ENUMERATION/BIJECTION/CROSS 범위
            bound_series: SERIES 차수
            max_workers: 1보다 크면 스레드 풀에서 병렬 실행
        """
        if bound_enum < 1 or bound_series < 1:
            raise InvalidBoundError(f"bound는 1 이상이어야 합니다: {bound_enum}, {bound_series}")
        if bound_enum > VerifyConfig.MAX_ENUM_BOUND:
            raise InvalidBoundError(f"열거 범위 {bound_enum}는 상한 {VerifyConfig.MAX_ENUM_BOUND}을 넘습니다")

        def run(pair: Tuple[IdentityId, Method]) -> IdentityReport:
            identity, method = pair
            return self.verify_identity(identity, bound_for(method, bound_enum, bound_series), method)

        if max_workers > 1:
            with ThreadPoolExecutor(max_workers=max_workers) as executor:
                return list(executor.map(run, matrix))
        return [run(pair) for pair in matrix]

    # ------------------------------------------------------------------
    # 공통 비교
    # ------------------------------------------------------------------

    def _cached_table(self, key: str, count: Callable[[int], int], n_max: int) -> CountTable:
        """
        key의 개수 표를 n_max까지 채워 돌려줍니다. 보고서들이 같은 표를 공유합니다.
        이미 계산한 앞부분은 다시 세지 않습니다.
        """
        with self._counts_lock:
            values = self._counts.get(key, ())
            if len(values) <= n_max:
                values = values + tuple(count(n) for n in range(len(values), n_max + 1))
                self._counts[key] = values
        return CountTable(values)

    def _table(self, cls: PartitionClass, n_max: int) -> CountTable:
        return self._cached_table(cls.value, lambda n: self.count(n, cls), n_max)

    @staticmethod
    def _check_links(
        identity: IdentityId, method: Method, lo: int, hi: int, links: Sequence[Link]
    ) -> IdentityReport:
        """n = lo..hi 에서 각 등식을 순서대로 비교하고 첫 불일치를 보고"""
        for n in range(lo, hi + 1):
            for label, lhs, rhs, start in links:
                if n < start:
                    continue
                left, right = lhs(n), rhs(n)
                if left != right:
                    witness = Witness(n=n, lhs=left, rhs=right, detail=label)
                    return IdentityReport.failed(identity, method, lo, n, witness)
        return IdentityReport.passed(identity, method, lo, hi)

    @staticmethod
    def _compare_series(
        identity: IdentityId, method: Method, lhs: Series, rhs: Series, label: str
    ) -> IdentityReport:
        for k, (left, right) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
            if left != right:
                witness = Witness(n=k, lhs=left, rhs=right, detail=label)
                return IdentityReport.failed(identity, method, 0, k, witness)
        return IdentityReport.passed(identity, method, 0, lhs.order)

    # ------------------------------------------------------------------
    # 항등식별 검사
    # ------------------------------------------------------------------

    def _eq_1_1_enumeration(self, bound: int) -> IdentityReport:
        ped = self._table(PartitionClass.PED, bound)
        regular = self._table(PartitionClass.FOUR_REGULAR, bound)
        return self._check_links(
            IdentityId.EQ_1_1, Method.ENUMERATION, 0, bound,
            [("ped(n) = 4-regular(n)", ped, regular, 0)],
        )

    def _eq_1_1_series(self, bound: int) -> IdentityReport:
        gfs = self.generating_functions
        return self._compare_series(
            IdentityId.EQ_1_1, Method.SERIES, gfs["ped"](bound), gfs["4regular"](bound),
            "(-q^2;q^2)_∞/(q;q^2)_∞ = (q^4;q^4)_∞/(q;q)_∞",
        )

    def _eq_1_1_cross(self, bound: int) -> IdentityReport:
        ped_series = self.generating_functions["ped"](bound)
        regular_series = self.generating_functions["4regular"](bound)
        ped = self._table(PartitionClass.PED, bound)
        regular = self._table(PartitionClass.FOUR_REGULAR, bound)
        return self._check_links(
            IdentityId.EQ_1_1, Method.CROSS, 0, bound,
            [
                ("[q^n] ped 곱 = ped(n) 열거", lambda n: ped_series.coeffs[n], ped, 0),
                ("[q^n] 4-regular 곱 = 4-regular(n) 열거", lambda n: regular_series.coeffs[n], regular, 0),
            ],
        )

    def _theorem(self, identity: IdentityId, bound: int) -> IdentityReport:
        which = Theorem(identity.value)
        lhs = theorem_lhs(which, bound, self.generating_functions)
        rhs = theorem_rhs(which, bound, self.generating_functions)
        return self._compare_series(identity, Method.SERIES, lhs, rhs, f"{which.value} 좌변 = 우변")

    def _lemma_2_1_enumeration(self, bound: int) -> IdentityReport:
        de1 = self._table(PartitionClass.DE1, bound)
        ped = self._table(PartitionClass.PED, bound)
        regular = self._table(PartitionClass.FOUR_REGULAR, bound)
        return self._check_links(
            IdentityId.LEMMA_2_1, Method.ENUMERATION, 1, bound,
            [
                ("DE1(n) + DE1(n-1) = ped(n)", lambda n: de1(n) + de1(n - 1), ped, 1),
                ("DE1(n) + DE1(n-1) = 4-regular(n)", lambda n: de1(n) + de1(n - 1), regular, 1),
            ],
        )

    def _lemma_2_2_enumeration(self, bound: int) -> IdentityReport:
        de3 = self._table(PartitionClass.DE3, bound + 2)
        ped = self._table(PartitionClass.PED, bound)
        regular = self._table(PartitionClass.FOUR_REGULAR, bound)
        return self._check_links(
            IdentityId.LEMMA_2_2, Method.ENUMERATION, 1, bound,
            [
                ("DE3(n+2) + DE3(n-1) = ped(n)", lambda n: de3(n + 2) + de3(n - 1), ped, 1),
                ("DE3(n+2) + DE3(n-1) = 4-regular(n)", lambda n: de3(n + 2) + de3(n - 1), regular, 1),
            ],
        )

    def _lemma_2_3_enumeration(self, bound: int) -> IdentityReport:
        de1 = self._table(PartitionClass.DE1, bound)
        de2 = self._table(PartitionClass.DE2, bound)
        de3 = self._table(PartitionClass.DE3, bound + 2)
        ped = self._table(PartitionClass.PED, bound)
        ped_gt1 = self._table(PartitionClass.PED_GT1, bound)
        regular_gt1 = self._regular_gt1_table(bound)

        def de2_pair(n: int) -> int:
            return de2(n) + de2(n - 3)

        # DE1(n) - DE1(n-2) 경유 등식은 n-2 >= 1 이어야 성립하므로 n >= 3부터 비교
        return self._check_links(
            IdentityId.LEMMA_2_3, Method.ENUMERATION, 1, bound,
            [
                ("DE2(n) = DE1(n) - DE3(n)", de2, lambda n: de1(n) - de3(n), 1),
                (
                    "DE1(n) + DE1(n-1) = DE3(n+2) + DE3(n-1)",
                    lambda n: de1(n) + de1(n - 1),
                    lambda n: de3(n + 2) + de3(n - 1),
                    1,
                ),
                ("DE2(n) + DE2(n-3) = DE1(n) - DE1(n-2)", de2_pair, lambda n: de1(n) - de1(n - 2), 3),
                ("DE1(n) - DE1(n-2) = ped(n) - ped(n-1)", lambda n: de1(n) - de1(n - 2),
                 lambda n: ped(n) - ped(n - 1), 3),
                ("ped(n) - ped(n-1) = ped_{>1}(n)", lambda n: ped(n) - ped(n - 1), ped_gt1, 1),
                ("DE2(n) + DE2(n-3) = ped_{>1}(n)", de2_pair, ped_gt1, 1),
                ("ped_{>1}(n) = 4-regular_{>1}(n)", ped_gt1, regular_gt1, 1),
            ],
        )

    def _regular_gt1_table(self, n_max: int) -> CountTable:
        """모든 파트가 2 이상인 4-regular 분할 개수 (열거)"""
        return self._cached_table("4regular-gt1", count_four_regular_gt1, n_max)

    def _bijection(self, identity: IdentityId, which: Bijection, bound: int) -> IdentityReport:
        forward_name, inverse_name = ("phi1", "psi1") if which == Bijection.PHI1 else ("phi3", "psi3")
        for n in range(1, bound + 1):
            layer = verify_bijection_layer(
                n, which, forward=self.maps[forward_name], inverse=self.maps[inverse_name]
            )
            if not layer.ok:
                return IdentityReport.failed(identity, Method.BIJECTION, 1, n, layer.witness)
        return IdentityReport.passed(identity, Method.BIJECTION, 1, bound)

    def _gf_cross(self, identity: IdentityId, bound: int) -> IdentityReport:
        name, cls = _GF_CLASSES[identity]
        series = self.generating_functions[name](bound)
        counts = self._table(cls, bound)
        return self._check_links(
            identity, Method.CROSS, 0, bound,
            [(f"[q^n] {name} 급수 = {name.upper()}(n) 열거", lambda n: series.coeffs[n], counts, 0)],
        )

    def _gf_series(self, identity: IdentityId, bound: int) -> IdentityReport:
        gfs = self.generating_functions
        one = series_const(1, bound)
        if identity == IdentityId.GF_DE1:
            lhs = (one + series_monomial(1, 1, bound)) * gfs["de1"](bound)
            rhs = gfs["ped"](bound) - one
            label = "(1+q)·DE1 = ped - 1"
        elif identity == IdentityId.GF_DE2:
            lhs = gfs["de2"](bound)
            rhs = gfs["de1"](bound) - gfs["de3"](bound)
            label = "DE2 = DE1 - DE3"
        else:
            q3 = series_monomial(1, 3, bound) if bound >= 3 else series_const(0, bound)
            q2 = series_monomial(1, 2, bound) if bound >= 2 else series_const(0, bound)
            lhs = (one + q3) * gfs["de3"](bound)
            rhs = gfs["ped"](bound).shift(2) - q2 + series_monomial(1, 1, bound)
            label = "(1+q^3)·DE3 = q^2·ped - q^2 + q"
        return self._compare_series(identity, Method.SERIES, lhs, rhs, label)


def verify_identity(identity: IdentityId, bound: int, method: Method) -> IdentityReport:
    """기본 경로를 쓰는 Verifier로 항등식 하나를 검사"""
    return Verifier().verify_identity(identity, bound, method)


def verify_all(bound_enum: int, bound_series: int) -> List[IdentityReport]:
    """기본 경로를 쓰는 Verifier로 DEFAULT_MATRIX 전체를 검사"""
    return Verifier().verify_all(bound_enum, bound_series)


def all_passed(reports: Sequence[IdentityReport]) -> bool:
    return all(report.ok for report in reports)
