"""
Command-line interface
Every subcommand prints one JSON document on stdout; exit 0 on success, 1 on verification failure, 2 on input error
"""
import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import orjson
from loguru import logger

from ..core.config import EngineSettings, get_settings
from ..core.errors import InputError, IntersectorError
from ..core.fingerprint import problem_fingerprint
from ..polyseries.aclass import AClassPoly, load_polynomial
from ..quotvi.models import EvalMethod, EvalResult
from ..quotvi.problem import build_problem
from ..quotvi.vafa_intriligator import vi_evaluate, vi_evaluate_numeric
from ..residueengine.moduli import moduli_pairing
from ..residueengine.quot_residue import quot_residue
from ..residueengine.verlinde import verlinde_chi
from ..wittenreps.witten_sum import witten_sum
from .asymptotics import asymptotic_extract
from .cache import ResultCache
from .equivalence import equivalence_report
from .grid import GridSpec
from .vanishing import vanishing_check
from .verlinde_paths import mapcount_report

Document = Dict[str, Any]
Outcome = Tuple[Document, int]


class HelpRequested(Exception):
    """--help was given; carries the help text of the parser that saw it"""

    def __init__(self, prog: str, text: str):
        super().__init__(prog)
        self.document: Document = {"help": text, "prog": prog}


class _Parser(argparse.ArgumentParser):
    """argparse that never exits: usage problems raise InputError, --help raises HelpRequested"""

    def error(self, message: str):
        raise InputError(f"usage: {message}", usage=self.format_usage().strip())

    def print_help(self, file=None):
        raise HelpRequested(self.prog, self.format_help())

    def exit(self, status: int = 0, message: Optional[str] = None):
        if status:
            raise InputError((message or f"{self.prog} exited with status {status}").strip(), status=status)
        raise HelpRequested(self.prog, (message or self.format_help()).strip())


# ===== Parser =====

def _problem_args(parser: argparse.ArgumentParser, with_n: bool = True, with_poly: bool = True) -> None:
    parser.add_argument("--r", type=int, required=True, help="rank")
    parser.add_argument("--d", type=int, required=True, help="degree, coprime to r")
    parser.add_argument("--g", type=int, required=True, help="genus >= 2")
    if with_n:
        parser.add_argument("--N", type=int, required=True, help="number of sections")
    if with_poly:
        parser.add_argument("--poly", type=Path, help="P polynomial JSON file (default P = 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="intersector", description="Exact Quot-scheme and moduli intersection numbers")
    parser.add_argument("--cache-dir", type=Path, help="result cache directory")
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    parser.add_argument("--threads", type=int, help="worker threads")
    parser.add_argument("--json-indent", type=int, choices=[0, 2], help="0 compact, 2 indented")
    commands = parser.add_subparsers(dest="command", required=True)

    vi = commands.add_parser("vi", help="Vafa-Intriligator sum")
    _problem_args(vi)
    vi.add_argument("--spoly", type=Path, help="S polynomial JSON file in a1..ar")
    vi.add_argument("--numeric", action="store_true", help="BigComplex evaluation instead of exact")
    vi.add_argument("--precision", type=int, help="mantissa bits for --numeric")

    quot = commands.add_parser("quot-residue", help="Quot-side iterated residue")
    _problem_args(quot)
    quot.add_argument("--spoly", type=Path, help="S polynomial JSON file in a1..ar")

    moduli = commands.add_parser("moduli", help="pairing of exp(f2) P over the moduli space")
    _problem_args(moduli, with_n=False)

    verlinde = commands.add_parser("verlinde", help="Verlinde number chi(L^s)")
    _problem_args(verlinde, with_n=False, with_poly=False)
    verlinde.add_argument("--s", type=int, required=True, help="level")
    verlinde.add_argument("--method", choices=["residue", "mapcount"], default="residue")

    witten = commands.add_parser("witten", help="height-truncated Witten sum")
    _problem_args(witten, with_n=False)
    witten.add_argument("--height", type=int, help="height cutoff H")
    witten.add_argument("--precision", type=int, help="mantissa bits")

    asymptote = commands.add_parser("asymptote", help="leading N-coefficient against the moduli pairing")
    _problem_args(asymptote, with_n=False)
    asymptote.add_argument("--n-list", required=True, help="comma-separated N values")

    vanish = commands.add_parser("vanish", help="vanishing of high-degree insertions")
    _problem_args(vanish)
    vanish.add_argument("--spoly", type=Path, help="S polynomial JSON file in a1..ar")

    equivalence = commands.add_parser("equivalence", help="VI against residues over a grid")
    equivalence.add_argument("--grid", type=Path, required=True, help="GridSpec JSON file")

    selftest = commands.add_parser("selftest", help="run the acceptance suite")
    selftest.add_argument("--quick", action="store_true", help="trimmed grids")
    selftest.add_argument("--fail-fast", action="store_true", help="stop after the first failing stage")
    return parser


# ===== Helpers =====

def _poly(args: argparse.Namespace) -> AClassPoly:
    path = getattr(args, "poly", None)
    return load_polynomial(path) if path is not None else AClassPoly.one(args.r)


def _spoly(args: argparse.Namespace) -> Optional[AClassPoly]:
    path = getattr(args, "spoly", None)
    return load_polynomial(path) if path is not None else None


def _cached(cache: ResultCache, fingerprint: str, compute: Callable[[], Document]) -> Document:
    entry = cache.get(fingerprint)
    if entry is not None:
        try:
            return orjson.loads(entry.value)
        except orjson.JSONDecodeError:
            logger.warning(f"cache entry {fingerprint[:12]} holds invalid JSON, recomputing")
    document = compute()
    cache.put(fingerprint, orjson.dumps(document, option=orjson.OPT_SORT_KEYS).decode())
    return document


def _timed(value_fn: Callable[[], Fraction], method: EvalMethod, fingerprint: str) -> Document:
    start = time.perf_counter()
    value = value_fn()
    elapsed = int((time.perf_counter() - start) * 1000)
    return EvalResult.exact(value, method, fingerprint, elapsed).to_output()


def _params(args: argparse.Namespace, *names: str) -> Dict[str, Any]:
    return {name: getattr(args, name) for name in names}


# ===== Subcommands =====

def cmd_vi(args: argparse.Namespace, settings: EngineSettings, cache: ResultCache) -> Outcome:
    problem = build_problem(args.r, args.d, args.g, args.N, _poly(args), _spoly(args))
    if args.numeric:
        precision = args.precision or settings.precision_bits
        fingerprint = problem_fingerprint(
            EvalMethod.VI_NUMERIC.value, {**problem.params(), "precision": precision}, {"P": problem.P, "S": problem.S}
        )
        document = _cached(cache, fingerprint, lambda: {
            **vi_evaluate_numeric(problem, precision).to_json(),
            "fingerprint": fingerprint,
        })
        return document, 0
    fingerprint = problem.fingerprint(EvalMethod.VI_EXACT.value)
    return _cached(cache, fingerprint, lambda: vi_evaluate(problem, threads=settings.threads).to_output()), 0


def cmd_quot_residue(args: argparse.Namespace, settings: EngineSettings, cache: ResultCache) -> Outcome:
    problem = build_problem(args.r, args.d, args.g, args.N, _poly(args), _spoly(args))
    fingerprint = problem.fingerprint(EvalMethod.QUOT_RESIDUE.value)
    return _cached(cache, fingerprint, lambda: quot_residue(problem).to_output()), 0


def cmd_moduli(args: argparse.Namespace, settings: EngineSettings, cache: ResultCache) -> Outcome:
    P = _poly(args)
    method = EvalMethod.MODULI_RESIDUE
    fingerprint = problem_fingerprint(method.value, _params(args, "r", "d", "g"), {"P": P})
    return _cached(cache, fingerprint, lambda: _timed(lambda: moduli_pairing(args.r, args.d, args.g, P), method, fingerprint)), 0


def cmd_verlinde(args: argparse.Namespace, settings: EngineSettings, cache: ResultCache) -> Outcome:
    params = _params(args, "r", "d", "g", "s")
    if args.method == "mapcount":
        method = EvalMethod.VERLINDE_MAPCOUNT
        fingerprint = problem_fingerprint(method.value, params)

        def compute() -> Document:
            start = time.perf_counter()
            report = mapcount_report(args.r, args.d, args.g, args.s, threads=settings.threads)
            elapsed = int((time.perf_counter() - start) * 1000)
            return {
                **EvalResult.exact(report.rational, method, fingerprint, elapsed).to_output(),
                "mapcount": report.model_dump(mode="json"),
            }

        return _cached(cache, fingerprint, compute), 0
    method = EvalMethod.VERLINDE_RESIDUE
    fingerprint = problem_fingerprint(method.value, params)
    value_fn = lambda: verlinde_chi(args.r, args.d, args.g, args.s)
    return _cached(cache, fingerprint, lambda: _timed(value_fn, method, fingerprint)), 0


def cmd_witten(args: argparse.Namespace, settings: EngineSettings, cache: ResultCache) -> Outcome:
    P = _poly(args)
    height = settings.witten_height if args.height is None else args.height
    precision = args.precision or settings.precision_bits
    params = {**_params(args, "r", "d", "g"), "height": height, "precision": precision, "safety": settings.tail_safety}
    fingerprint = problem_fingerprint("witten", params, {"P": P})
    return _cached(cache, fingerprint, lambda: {
        **witten_sum(args.r, args.d, args.g, P, height, precision, settings.tail_safety).to_json(),
        "fingerprint": fingerprint,
    }), 0


def _parse_n_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"--n-list must be comma-separated integers: {text!r}") from exc


def cmd_asymptote(args: argparse.Namespace, settings: EngineSettings, cache: ResultCache) -> Outcome:
    P = _poly(args)
    ns = _parse_n_list(args.n_list)
    fingerprint = problem_fingerprint("asymptote", {**_params(args, "r", "d", "g"), "N_list": ns}, {"P": P})
    document = _cached(cache, fingerprint, lambda: {
        **asymptotic_extract(args.r, args.d, args.g, P, ns).model_dump(mode="json"),
        "fingerprint": fingerprint,
    })
    passed = document["verdict"] in ("interpolated-match", "ratio-converges")
    return document, 0 if passed else 1


def cmd_vanish(args: argparse.Namespace, settings: EngineSettings, cache: ResultCache) -> Outcome:
    P, S = _poly(args), _spoly(args)
    fingerprint = problem_fingerprint("vanish", _params(args, "r", "d", "g", "N"), {"P": P, "S": S})
    document = _cached(cache, fingerprint, lambda: {
        **vanishing_check(args.r, args.d, args.g, args.N, P, S, threads=settings.threads).model_dump(mode="json"),
        "fingerprint": fingerprint,
    })
    return document, 0 if document["vanishes"] else 1


def cmd_equivalence(args: argparse.Namespace, settings: EngineSettings, cache: ResultCache) -> Outcome:
    try:
        grid = GridSpec.model_validate(orjson.loads(args.grid.read_bytes()))
    except OSError as exc:
        raise InputError(f"cannot read grid file {args.grid}: {exc}") from exc
    except orjson.JSONDecodeError as exc:
        raise InputError(f"grid file {args.grid} is not valid JSON: {exc}") from exc
    except ValueError as exc:
        raise InputError(f"invalid grid: {exc}") from exc
    report = equivalence_report(grid, threads=settings.threads)
    document = {**report.model_dump(mode="json"), "passed": report.passed}
    return document, 0 if report.passed else 1


def cmd_selftest(args: argparse.Namespace, settings: EngineSettings, cache: ResultCache) -> Outcome:
    from ..graph.verification_graph import run_selftest

    state = run_selftest(quick=args.quick, fail_fast=args.fail_fast)
    document = {
        "passed": bool(state.get("passed")),
        "summary": state.get("summary", {}),
        "checks": state.get("checks", []),
        "errors": state.get("errors", []),
    }
    return document, 0 if document["passed"] else 1


COMMANDS: Dict[str, Callable[[argparse.Namespace, EngineSettings, ResultCache], Outcome]] = {
    "vi": cmd_vi,
    "quot-residue": cmd_quot_residue,
    "moduli": cmd_moduli,
    "verlinde": cmd_verlinde,
    "witten": cmd_witten,
    "asymptote": cmd_asymptote,
    "vanish": cmd_vanish,
    "equivalence": cmd_equivalence,
    "selftest": cmd_selftest,
}


# ===== Entry point =====

def _apply_overrides(settings: EngineSettings, args: argparse.Namespace) -> EngineSettings:
    update: Dict[str, Any] = {}
    if args.cache_dir is not None:
        update["cache"] = args.cache_dir
    if args.no_cache:
        update["cache_enabled"] = False
    if args.threads is not None:
        if args.threads < 1:
            raise InputError(f"--threads must be at least 1, got {args.threads}")
        update["threads"] = args.threads
    if args.json_indent is not None:
        update["json_indent"] = args.json_indent
    return settings.model_copy(update=update) if update else settings


def _emit(document: Document, indent: int) -> None:
    option = orjson.OPT_SORT_KEYS | (orjson.OPT_INDENT_2 if indent > 0 else 0)
    sys.stdout.write(orjson.dumps(document, option=option, default=str).decode() + "\n")
    sys.stdout.flush()


def run_cli(argv: Sequence[str], settings: Optional[EngineSettings] = None) -> int:
    """Parse argv, dispatch, print one JSON document and return the exit code"""
    settings = settings or get_settings()
    indent = settings.json_indent
    try:
        args = build_parser().parse_args(list(argv))
        settings = _apply_overrides(settings, args)
        indent = settings.json_indent
        cache = ResultCache(settings.cache, settings.cache_enabled)
        logger.debug(f"command {args.command} with threads={settings.threads} cache={settings.cache_enabled}")
        document, code = COMMANDS[args.command](args, settings, cache)
    except HelpRequested as e:
        document, code = e.document, 0
    except IntersectorError as e:
        logger.error(f"{e.__class__.__name__}: {e.message}")
        document, code = e.to_dict(), e.exit_code
    except Exception as e:
        logger.exception("internal error")
        document, code = {"error": "InternalError", "message": str(e)}, 1
    _emit(document, indent)
    return code
