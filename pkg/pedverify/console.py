"""
콘솔 로그 출력
stdout은 결과 전용이므로 진행 로그는 모두 stderr로 보냅니다.
"""

import sys


def log(tag: str, message: str) -> None:
    """[Tag] 형식의 한 줄 로그를 stderr에 출력"""
    print(f"[{tag}] {message}", file=sys.stderr, flush=True)
