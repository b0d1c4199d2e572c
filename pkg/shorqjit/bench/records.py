from pathlib import Path
from typing import Iterable, Union

import pandas as pd

from shorqjit.schemas.bench import BenchRecord

CSV_COLUMNS = [
    "n", "N", "a", "flags", "construction_time_s", "node_count",
    "g1", "g2", "g3", "total", "reduction_ratio",
    "trials", "seed", "host", "profile", "series",
]

INTEGER_COLUMNS = ["n", "N", "a", "node_count", "g1", "g2", "g3", "total", "trials", "seed"]


def records_to_frame(records: Iterable[BenchRecord]) -> pd.DataFrame:
    rows = [record.model_dump() for record in records]
    frame = pd.DataFrame(rows, columns=CSV_COLUMNS)
    for column in INTEGER_COLUMNS:
        frame[column] = frame[column].astype("Int64")
    return frame


def frame_to_records(frame: pd.DataFrame) -> list[BenchRecord]:
    clean = frame.astype(object).where(frame.notna(), None)
    records = []
    for row in clean.to_dict(orient="records"):
        for key in ("host", "profile"):
            if row.get(key) is None:
                row[key] = ""
        records.append(BenchRecord(**{key: row.get(key) for key in CSV_COLUMNS}))
    return records


def write_csv(records: Iterable[BenchRecord], path: Union[str, Path]) -> pd.DataFrame:
    frame = records_to_frame(records)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
    return frame


def read_csv(path: Union[str, Path]) -> list[BenchRecord]:
    frame = pd.read_csv(path, dtype={"flags": str, "host": str, "profile": str, "series": str})
    return frame_to_records(frame)
