"""
ped 항등식 검증기
distinct even parts 분할과 4-regular 분할 사이의 항등식을
열거/전단사/q-급수 세 경로로 검증합니다.
"""

__version__ = "1.0.0"
