"""
Script para reproducir los benchmarks de construcción y de reducción de compuertas.
Escribe los CSV en data/benchmarks/.
"""
import os
import sys
from pathlib import Path

# Añadir directorio raíz al path
ROOT_DIR = Path(__file__).parent.parent
sys.path.append(str(ROOT_DIR))

from shorqjit.bench import bench_construction, bench_ratio, summarize_ratio, write_csv  # noqa: E402
from shorqjit.core.config import settings  # noqa: E402

OUTPUT_DIR = os.path.join(ROOT_DIR, "data", "benchmarks")

COMPILE_BITS = [8, 16, 32]
RATIO_BITS = list(range(4, 17))


def main():
    os.makedirs(OUTPUT_DIR, exist_ok=True)

    print(f"Midiendo construcción para n = {COMPILE_BITS}...")
    compile_records = bench_construction(COMPILE_BITS, settings.BENCH_REPETITIONS)
    compile_path = os.path.join(OUTPUT_DIR, "compile.csv")
    write_csv(compile_records, compile_path)
    for record in compile_records:
        print(f"  n={record.n}: {record.construction_time_s * 1000:.3f} ms, {record.node_count} nodos")
    print(f"✅ {compile_path}")

    print(f"Contando compuertas para n = {RATIO_BITS[0]}..{RATIO_BITS[-1]}...")
    ratio_records = bench_ratio(RATIO_BITS, samples=10, seed=0)
    ratio_path = os.path.join(OUTPUT_DIR, "ratio.csv")
    write_csv(ratio_records, ratio_path)
    print(summarize_ratio(ratio_records).to_string(index=False))
    print(f"✅ {ratio_path}")


if __name__ == "__main__":
    main()
