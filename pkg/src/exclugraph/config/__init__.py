from .config import FilePaths, Tolerances, LOG_FORMAT, LOG_LEVEL, file_paths, tolerances

__all__ = ["FilePaths", "Tolerances", "LOG_FORMAT", "LOG_LEVEL", "file_paths", "tolerances"]
