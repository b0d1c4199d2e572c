# Conteo de compuertas, tiempos de construcción y reducción por optimizaciones

from shorqjit.bench.construction import bench_construction, host_metadata, time_build
from shorqjit.bench.counting import GateCountingVisitor, count_gates, count_program
from shorqjit.bench.lowering import LOWERED_TALLY, lower_event
from shorqjit.bench.ratio import bench_ratio, plan_cells, semiprime_for_bit_width, summarize_ratio
from shorqjit.bench.records import CSV_COLUMNS, frame_to_records, read_csv, records_to_frame, write_csv

__all__ = [
    "CSV_COLUMNS",
    "GateCountingVisitor",
    "LOWERED_TALLY",
    "bench_construction",
    "bench_ratio",
    "count_gates",
    "count_program",
    "frame_to_records",
    "host_metadata",
    "lower_event",
    "plan_cells",
    "read_csv",
    "records_to_frame",
    "semiprime_for_bit_width",
    "summarize_ratio",
    "time_build",
    "write_csv",
]
