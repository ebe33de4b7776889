from pathlib import Path
from dataclasses import dataclass, field
import os

from dotenv import load_dotenv

load_dotenv()


@dataclass
class FilePaths():
    script_path: str = Path(__file__).resolve()
    cache_folder: str = Path.home() / '.exclugraph'
    cache_path: str = field(default=None)

    def __post_init__(self):
        self.script_path = str(self.script_path)
        self.cache_folder = str(self.cache_folder)
        if self.cache_path is None:
            self.cache_path = os.getenv("EXCLUGRAPH_CACHE", str(Path(self.cache_folder) / 'cache.jsonl'))
        self.cache_path = str(self.cache_path)


@dataclass(frozen=True)
class Tolerances():
    sdp_gap: float = 1e-8
    sdp_max_iterations: int = 200
    sdp_max_vertices: int = 40
    max_vertices: int = 64
    automorphism_cap: int = 10**7
    exhaustive_vertices: int = 8
    boundary_band: float = 1e-6
    sandwich_slack: float = 1e-6
    e_principle_slack: float = 1e-9
    witness_slack: float = 1e-5
    witness_gap: float = 1e-12
    duality_slack: float = 1e-5
    psd_slack: float = 1e-9
    lp_feasibility: float = 1e-9
    lp_slackness: float = 1e-8


LOG_LEVEL = os.getenv("EXCLUGRAPH_LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

file_paths = FilePaths()
tolerances = Tolerances()
