from .text_handler import TextHandler, CSV_COLUMNS

__all__ = ["TextHandler", "CSV_COLUMNS"]
