from .records import Outcome, RunReport
from .main import build_parser, main

__all__ = ["Outcome", "RunReport", "build_parser", "main"]
