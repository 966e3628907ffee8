"""python -m pedverify"""

from .cli import run

run()
