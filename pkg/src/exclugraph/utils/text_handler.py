from pathlib import Path
from typing import Dict, List

import numpy as np
import pandas as pd

from exclugraph.errors import ParseError

CSV_COLUMNS = ["graph6", "n", "alpha", "theta", "alpha_star", "vt", "sc", "theta_complement", "product_vt_check"]


class TextHandler():

    @staticmethod
    def parse_vector(text: str) -> np.ndarray:
        """Comma-separated decimals, e.g. '0.5,0.5,0.5'."""
        values: List[float] = []
        offset = 0
        for token in text.split(","):
            stripped = token.strip()
            try:
                values.append(float(stripped))
            except ValueError:
                raise ParseError(f"Not a number: {stripped!r}", offset) from None
            offset += len(token) + 1
        return np.array(values, dtype=float)

    @staticmethod
    def read_vector_file(path: str) -> np.ndarray:
        """One value per line; blank lines and '#' comments are ignored."""
        values: List[float] = []
        offset = 0
        for line in Path(path).read_text(encoding="utf-8").splitlines(keepends=True):
            stripped = line.split("#", 1)[0].strip()
            if stripped:
                try:
                    values.append(float(stripped))
                except ValueError:
                    raise ParseError(f"Not a number in {path}: {stripped!r}", offset) from None
            offset += len(line.encode("utf-8"))
        return np.array(values, dtype=float)

    @staticmethod
    def format_vector(values: np.ndarray) -> str:
        return ",".join(repr(float(x)) for x in values)

    @staticmethod
    def dict2csv(rows: List[Dict], save_path: str) -> None:
        """Appends rows with the fixed column set; the header is written only for a new file."""
        df = pd.DataFrame(rows).reindex(columns=CSV_COLUMNS)
        path = Path(save_path)
        new_file = not path.exists() or path.stat().st_size == 0
        path.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(path, mode="a", header=new_file, index=False)
