"""
Línea de comandos de ShorQJIT.

    python -m shorqjit factor 15 --seed 1
    python -m shorqjit count 15 7 --opt none --lowered
    python -m shorqjit bench compile --bits 8,16,32 --reps 3 --csv data/compile.csv
    python -m shorqjit bench ratio --bits 4..16 --samples 10 --seed 0
    python -m shorqjit dump-ir --bits 4

Códigos de salida: 0 éxito, 1 factorización fallida, 2 error de uso.
"""
import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from sympy import isprime

from shorqjit.bench import bench_construction, bench_ratio, count_gates, records_to_frame, summarize_ratio, write_csv
from shorqjit.circuits import build_qpe_program
from shorqjit.core.config import settings
from shorqjit.core.exceptions import CapacityError, InvalidArgumentError, PreconditionError
from shorqjit.driver import check_preconditions, shors_algorithm
from shorqjit.ir import dump_ir
from shorqjit.schemas.optimization import OptimizationFlags

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def parse_bits(text: str) -> list[int]:
    """'4..16' (rango inclusivo) o '8,16,32'."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
            bits = list(range(low, high + 1))
        else:
            bits = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Anchos de bits inválidos: {text!r}") from None
    if not bits or any(n < 1 for n in bits):
        raise argparse.ArgumentTypeError(f"Anchos de bits inválidos: {text!r}")
    return bits


def parse_flags(text: str) -> OptimizationFlags:
    try:
        return OptimizationFlags.parse(text)
    except InvalidArgumentError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shorqjit", description="Compilador híbrido y simulador del algoritmo de Shor")
    commands = parser.add_subparsers(dest="command", required=True)

    factor = commands.add_parser("factor", help="Factoriza N simulando el programa compilado")
    factor.add_argument("N", type=int)
    factor.add_argument("--seed", type=int, default=None)
    factor.add_argument("--t", type=int, default=None, help="Iteraciones de estimación (2n por defecto)")
    factor.add_argument("--opt", type=parse_flags, default=OptimizationFlags.all(),
                        help="all, none, baseline o lista de flags separada por comas")
    factor.add_argument("--max-attempts", type=int, default=settings.DEFAULT_MAX_ATTEMPTS)
    factor.add_argument("--json", action="store_true")

    count = commands.add_parser("count", help="Cuenta compuertas sin simular")
    count.add_argument("N", type=int)
    count.add_argument("a", type=int)
    count.add_argument("--t", type=int, default=None)
    count.add_argument("--opt", type=parse_flags, default=OptimizationFlags.all())
    count.add_argument("--lowered", action="store_true", help="Descompone las compuertas de 3 qubits")
    count.add_argument("--count-zero-angle", action=argparse.BooleanOptionalAction, default=True,
                       help="Cuenta también las fases de ángulo 0")
    count.add_argument("--json", action="store_true")

    bench = commands.add_parser("bench", help="Benchmarks")
    bench_commands = bench.add_subparsers(dest="bench_command", required=True)
    compile_cmd = bench_commands.add_parser("compile", help="Tiempo de construcción por ancho de bits")
    compile_cmd.add_argument("--bits", type=parse_bits, default=parse_bits("8,16,32"))
    compile_cmd.add_argument("--reps", type=int, default=settings.BENCH_REPETITIONS)
    compile_cmd.add_argument("--csv", default=None)
    ratio_cmd = bench_commands.add_parser("ratio", help="Reducción de compuertas por las optimizaciones")
    ratio_cmd.add_argument("--bits", type=parse_bits, default=parse_bits("4..16"))
    ratio_cmd.add_argument("--samples", type=int, default=10)
    ratio_cmd.add_argument("--seed", type=int, default=0)
    ratio_cmd.add_argument("--workers", type=int, default=settings.BENCH_WORKERS)
    ratio_cmd.add_argument("--csv", default=None)

    dump = commands.add_parser("dump-ir", help="Imprime el IR del programa de n bits")
    dump.add_argument("--bits", type=int, required=True)
    return parser


def _validate_modulus(N: int) -> None:
    check_preconditions(N)
    if isprime(N):
        raise PreconditionError(f"N = {N} es primo")


def _run_factor(args: argparse.Namespace) -> int:
    _validate_modulus(args.N)
    result = shors_algorithm(args.N, seed=args.seed, flags=args.opt, max_attempts=args.max_attempts, t=args.t)
    if args.json:
        print(result.model_dump_json(indent=2))
    elif result.success:
        print(f"p={result.p} q={result.q}")
    else:
        print(f"Sin factores para N={args.N} tras {len(result.attempts)} intentos")
    return EXIT_OK if result.success else EXIT_FAILURE


def _run_count(args: argparse.Namespace) -> int:
    counts = count_gates(
        args.N, args.a, t=args.t, flags=args.opt,
        lowered=args.lowered, count_zero_angle=args.count_zero_angle,
    )
    if args.json:
        print(json.dumps({**counts.model_dump(), "total": counts.total}))
    else:
        print(
            f"g1={counts.one_qubit} g2={counts.two_qubit} g3={counts.three_qubit} total={counts.total} "
            f"measurements={counts.measurements} resets={counts.resets}"
        )
    return EXIT_OK


def _emit(records: list, csv_path: Optional[str]) -> None:
    if csv_path:
        write_csv(records, csv_path)
        print(f"{len(records)} filas escritas en {csv_path}")
    else:
        records_to_frame(records).to_csv(sys.stdout, index=False)


def _run_bench(args: argparse.Namespace) -> int:
    if args.bench_command == "compile":
        _emit(bench_construction(args.bits, args.reps), args.csv)
    else:
        records = bench_ratio(args.bits, samples=args.samples, seed=args.seed, workers=args.workers)
        _emit(records, args.csv)
        print(summarize_ratio(records).to_string(index=False), file=sys.stderr)
    return EXIT_OK


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        if args.command == "factor":
            return _run_factor(args)
        if args.command == "count":
            return _run_count(args)
        if args.command == "bench":
            return _run_bench(args)
        print(dump_ir(build_qpe_program(args.bits)), end="")
        return EXIT_OK
    except CapacityError as e:
        logger.error(f"Capacidad superada: {e}")
        print(f"error: {e}. Para anchos grandes usa 'shorqjit count' en lugar de 'factor'.", file=sys.stderr)
        return EXIT_USAGE
    except InvalidArgumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
