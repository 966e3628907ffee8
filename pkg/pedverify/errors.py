"""
pedverify 예외 정의
모든 도메인 예외는 ValueError를 상속하므로 입력 검증 오류로 취급됩니다.
"""


class PedVerifyError(ValueError):
    """pedverify 예외의 공통 부모"""


class InvalidPartitionError(PedVerifyError):
    """파트가 양의 정수가 아니거나 파티션 정규형을 만들 수 없는 경우"""


class WeightBoundError(PedVerifyError):
    """열거 대상 weight가 음수이거나 설정된 상한을 넘는 경우"""


class MapPreconditionError(PedVerifyError):
    """전단사 사상의 정의역 밖 입력 (ped 아님, weight 불일치 등)"""


class SeriesError(PedVerifyError):
    """절단 차수 불일치, 범위 밖 지수, 단위가 아닌 상수항"""


class IncompatibleMethodError(PedVerifyError):
    """항등식 ID와 검증 방법 조합이 허용되지 않는 경우"""


class InvalidBoundError(PedVerifyError):
    """검증 범위 상한이 1 미만인 경우"""
