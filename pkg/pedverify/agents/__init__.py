"""
A2A 에이전트 모듈
"""

from .base import BaseAgent
from .partition_agent import PartitionAgent

__all__ = ["BaseAgent", "PartitionAgent"]
