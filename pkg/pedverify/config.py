"""
검증 설정
기본 검증 범위와 에이전트 서버의 URL/포트 설정을 관리합니다.
"""

import os

from dotenv import load_dotenv

# .env 파일 로드 (에이전트 서버 전용 설정)
load_dotenv()


class VerifyConfig:
    """검증 및 에이전트 설정"""

    # 기본 검증 범위
    DEFAULT_ENUM_BOUND = 40
    DEFAULT_SERIES_BOUND = 200

    # 열거 가능한 최대 weight
    MAX_WEIGHT = 200

    # verify / count / list가 받는 열거 범위 상한 (급수 차수에는 적용하지 않음)
    MAX_ENUM_BOUND = 80

    # 에이전트 서버 기본값
    DEFAULT_AGENT_PORT = 8010
    DEFAULT_HOST = "0.0.0.0"

    @staticmethod
    def get_agent_port() -> int:
        """PartitionAgent 포트 반환"""
        return int(os.getenv("PEDVERIFY_PORT", VerifyConfig.DEFAULT_AGENT_PORT))

    @staticmethod
    def get_agent_host() -> str:
        """PartitionAgent 바인드 호스트 반환"""
        return os.getenv("PEDVERIFY_HOST", VerifyConfig.DEFAULT_HOST)

    @staticmethod
    def get_agent_url() -> str:
        """PartitionAgent URL 반환"""
        base_url = os.getenv("PEDVERIFY_AGENT_URL")
        if base_url:
            return base_url
        return f"http://localhost:{VerifyConfig.get_agent_port()}"

    @staticmethod
    def get_enum_bound() -> int:
        """에이전트가 verify 요청에 사용하는 기본 열거 범위"""
        return int(os.getenv("PEDVERIFY_ENUM_BOUND", VerifyConfig.DEFAULT_ENUM_BOUND))

    @staticmethod
    def get_series_bound() -> int:
        """에이전트가 verify 요청에 사용하는 기본 급수 차수"""
        return int(os.getenv("PEDVERIFY_SERIES_BOUND", VerifyConfig.DEFAULT_SERIES_BOUND))

    @staticmethod
    def is_verbose() -> bool:
        """검증 진행 로그 출력 여부"""
        return os.getenv("PEDVERIFY_VERBOSE", "").lower() in ("1", "true", "yes")
