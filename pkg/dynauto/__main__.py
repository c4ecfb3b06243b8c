"""Entry point for dynauto: python -m dynauto COMMAND [options]

Exit status: 0 success / accepted / unanimous, 1 rejected / disagreement,
2 malformed input or invalid options, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .automata import (
    afw_to_dot, afw_to_facts, afw_to_nfa, build_afw, dfa_to_dot, dfa_to_facts, minimize_dfa,
    nfa_to_dfa, nfa_to_dot,
)
from .automata.afw import Afw
from .automata.dfa import Dfa
from .config import DynConfig, load_config
from .engines import ENGINE_NAMES, default_registry
from .errors import ConfigError, DynautoError, ResourceLimitError
from .logging_config import get_logger, log_event, setup_logging
from .logic import Dialect, atoms, closure, nnf, parse, positive_closure, to_text
from .logic.corpus import CORPUS, CorpusEntry
from .mso import ENTRY_VAR, And, ExistsFO, First, emit_mona, mso_enc, st_m
from .persistence import dumps
from .trace import SymbolTable, enumerate_traces, random_traces, read_trace, write_jsonl
from .xcheck import cross_check

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

TARGETS = ("afw", "nfa", "dfa", "dfa-min")
FORMATS = ("facts", "dot", "json", "text")

_GREEN, _RED, _RESET = "\033[32m", "\033[31m", "\033[0m"


# ------------------------------------------------------------------ #
#  Helpers                                                            #
# ------------------------------------------------------------------ #
def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _formula(args):
    return parse(_read_input(args.formula), args.dialect)


def _verdict(config: DynConfig, ok: bool, yes: str, no: str) -> str:
    label = yes if ok else no
    if config.COLOR and sys.stdout.isatty():
        return f"{_GREEN if ok else _RED}{label}{_RESET}"
    return label


def _formula_entries(text: str, dialect: Dialect) -> list[CorpusEntry]:
    """One formula per non-comment line, optionally prefixed by `name: `."""
    entries = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, body = line.partition(": ")
        if not sep or " " in name:
            name, body = f"f{number}", line
        entries.append(CorpusEntry(name, to_text(parse(body, dialect))))
    return entries


# ------------------------------------------------------------------ #
#  Commands                                                           #
# ------------------------------------------------------------------ #
def cmd_parse(args, config: DynConfig) -> int:
    _emit(args, to_text(_formula(args), args.dialect) + "\n")
    return EXIT_OK


def cmd_nnf(args, config: DynConfig) -> int:
    _emit(args, to_text(nnf(_formula(args)), args.dialect) + "\n")
    return EXIT_OK


def cmd_closure(args, config: DynConfig) -> int:
    formula = _formula(args)
    members = closure(formula) if args.negations else positive_closure(formula)
    _emit(args, "".join(f"{i}: {to_text(m, args.dialect)}\n" for i, m in enumerate(members)))
    return EXIT_OK


def _build(args, config: DynConfig, formula):
    if args.mona:
        if args.target not in ("dfa", "dfa-min"):
            raise ConfigError("--mona applies to the dfa and dfa-min targets only")
        from .automata.mona import run_mona
        order = sorted(atoms(formula))
        dfa = run_mona(_mso_program(formula, "st"), order)
        return minimize_dfa(dfa) if args.target == "dfa-min" else dfa
    state_cap = args.state_cap or config.DFA_STATE_CAP
    afw = build_afw(formula)
    log_event("AFW", logger="dynauto.cli", states=len(afw.states), conjuncts=afw.transition_count)
    if args.target == "afw":
        return afw
    nfa = afw_to_nfa(afw)
    log_event("NFA", logger="dynauto.cli", states=len(nfa.states), transitions=len(nfa.transitions))
    if args.target == "nfa":
        return nfa
    dfa = nfa_to_dfa(nfa, state_cap=state_cap)
    log_event("DFA", logger="dynauto.cli", states=dfa.size, transitions=dfa.transition_count)
    if args.target == "dfa":
        return dfa
    minimal = minimize_dfa(dfa)
    log_event("MINIMIZE", logger="dynauto.cli", before=dfa.size, after=minimal.size)
    return minimal


def _summary(target: str, automaton) -> str:
    if isinstance(automaton, Afw):
        lines = [f"{target}: {len(automaton.states)} states, {automaton.transition_count} transitions"]
        lines += [f"  {q}{' (initial)' if q == automaton.initial else ''}: {automaton.label(q)}"
                  for q in range(len(automaton.states))]
    elif isinstance(automaton, Dfa):
        lines = [f"{target}: {automaton.size} states, {automaton.transition_count} transitions"]
        for q in range(automaton.size):
            marks = [m for m, on in (("initial", q == automaton.initial), ("final", q in automaton.finals)) if on]
            lines.append(f"  {q}{' (' + ', '.join(marks) + ')' if marks else ''}: {automaton.labels[q]}")
    else:
        lines = [f"{target}: {len(automaton.states)} states, {len(automaton.transitions)} transitions"]
        for q in range(len(automaton.states)):
            marks = [m for m, on in (("initial", q in automaton.initial), ("final", q in automaton.finals)) if on]
            lines.append(f"  {q}{' (' + ', '.join(marks) + ')' if marks else ''}: {automaton.label(q)}")
    return "\n".join(lines) + "\n"


def cmd_compile(args, config: DynConfig) -> int:
    automaton = _build(args, config, _formula(args))
    if args.format == "text":
        text = _summary(args.target, automaton)
    elif args.format == "json":
        text = dumps(automaton)
    elif args.format == "dot":
        if isinstance(automaton, Afw):
            text = afw_to_dot(automaton)
        elif isinstance(automaton, Dfa):
            text = dfa_to_dot(automaton)
        else:
            text = nfa_to_dot(automaton)
    else:
        if isinstance(automaton, Afw):
            text = afw_to_facts(automaton)
        elif isinstance(automaton, Dfa):
            text = dfa_to_facts(automaton)
        else:
            raise ConfigError("facts output is available for afw, dfa and dfa-min only")
    _emit(args, text)
    return EXIT_OK


def cmd_check(args, config: DynConfig) -> int:
    formula = _formula(args)
    symbols = SymbolTable.for_atoms(atoms(formula))
    trace = read_trace(_read_input(args.trace), args.trace_format, symbols)
    registry = default_registry(config)
    started = time.perf_counter()
    accepted = registry.checker(args.engine, formula)(trace)
    elapsed = time.perf_counter() - started
    log_event("CHECK", logger="dynauto.cli", engine=args.engine, length=len(trace),
              accepted=accepted, seconds=f"{elapsed:.4f}")
    verdict = _verdict(config, accepted, "ACCEPTED", "REJECTED")
    _emit(args, f"{verdict} (engine: {args.engine}, {elapsed:.4f}s)\n")
    return EXIT_OK if accepted else EXIT_NO


def _xcheck_entries(args) -> list[CorpusEntry]:
    if args.source == "builtin":
        return list(CORPUS)
    return _formula_entries(_read_input(args.source), args.dialect)


def cmd_xcheck(args, config: DynConfig) -> int:
    logger = get_logger("dynauto.xcheck")
    engines = args.engines.split(",") if args.engines else list(ENGINE_NAMES)
    unknown = [e for e in engines if e not in ENGINE_NAMES]
    if unknown:
        raise ConfigError(f"unknown engines: {', '.join(unknown)}")
    entries = _xcheck_entries(args)
    if args.alphabet is not None:
        alphabet = frozenset(a for a in args.alphabet.split(",") if a)
    elif args.source == "builtin":
        alphabet = frozenset({"a", "b"})
    else:
        alphabet = frozenset().union(*(atoms(e.formula) for e in entries))
    if args.source == "builtin":
        skipped = [e.name for e in entries if not atoms(e.formula) <= alphabet]
        if skipped:
            logger.info("skipping entries with atoms outside the alphabet: %s", ", ".join(skipped))
        entries = [e for e in entries if atoms(e.formula) <= alphabet]
    max_len = args.max_len or config.MAX_TRACE_LEN
    traces = list(enumerate_traces(alphabet, max_len, config.ENUM_MAX_ALPHABET))
    extra = config.RANDOM_TRACES if args.random is None else args.random
    if extra:
        traces += random_traces(alphabet, extra, config.RANDOM_MAX_LEN,
                                config.RANDOM_SEED if args.seed is None else args.seed)

    registry = default_registry(config)
    results = []

    def records():
        for entry in entries:
            result = cross_check(entry, traces, registry, engines)
            results.append(result)
            yield result.record()

    if args.metrics:
        write_jsonl(args.metrics, records())
    else:
        for _ in records():
            pass

    lines = []
    for result in results:
        if result.unanimous:
            count = result.accepted[engines[0]]
            lines.append(f"{result.name}: {result.checked} traces, {count} accepted, "
                         f"{_verdict(config, True, 'unanimous', '')}")
        else:
            lines.append(f"{result.name}: {_verdict(config, False, '', 'DISAGREEMENT')} "
                         f"at {result.disagreement.describe()}")
    failures = sum(not r.unanimous for r in results)
    lines.append(f"{len(results)} formulas, {sum(r.checked for r in results)} checks, "
                 f"{failures} disagreements")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if failures == 0 else EXIT_NO


def _mso_program(formula, flavor: str) -> str:
    translate = st_m if flavor == "st" else mso_enc
    closed = ExistsFO(ENTRY_VAR, And(First(ENTRY_VAR), translate(ENTRY_VAR, formula)))
    return emit_mona(closed, atoms(formula))


def cmd_emit_mso(args, config: DynConfig) -> int:
    formula = _formula(args)
    program = _mso_program(formula, args.flavor)
    log_event("MSO", logger="dynauto.cli", flavor=args.flavor, chars=len(program))
    _emit(args, program)
    return EXIT_OK


# ------------------------------------------------------------------ #
#  Argument parsing                                                   #
# ------------------------------------------------------------------ #
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dynauto",
                                 description="Compile and check dynamic formulas over finite traces.")
    ap.add_argument("--config", type=str, default=None, help="YAML configuration file.")
    ap.add_argument("--log-level", type=str, default="WARNING",
                    help="Console log level (DEBUG, INFO, WARNING, ...).")
    ap.add_argument("--log-file", type=str, default=None, help="Also log to this file.")
    ap.add_argument("--dialect", type=str, default=None, help="Formula syntax: canonical or theory.")
    ap.add_argument("--out", type=str, default=None, help="Write the artifact here instead of stdout.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, help_text in (("parse", cmd_parse, "Print the parsed formula."),
                                ("nnf", cmd_nnf, "Print the negation normal form."),
                                ("closure", cmd_closure, "List the closure members.")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("formula", help="Formula file, or - for stdin.")
        p.set_defaults(fn=fn)
        if name == "closure":
            p.add_argument("--negations", action="store_true", help="Include negated members.")

    p = sub.add_parser("compile", help="Build an automaton.")
    p.add_argument("formula")
    p.add_argument("--target", choices=TARGETS, default="afw")
    p.add_argument("--format", choices=FORMATS, default="facts")
    p.add_argument("--state-cap", type=int, default=None, help="Determinization state bound.")
    p.add_argument("--mona", action="store_true", help="Build the DFA with an installed MONA binary.")
    p.set_defaults(fn=cmd_compile)

    p = sub.add_parser("check", help="Decide whether a trace satisfies a formula.")
    p.add_argument("formula")
    p.add_argument("trace", help="Trace file (JSON or facts), or - for stdin.")
    p.add_argument("--engine", choices=ENGINE_NAMES, default="afw")
    p.add_argument("--trace-format", choices=("json", "facts"), default="json")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("xcheck", help="Cross-check engines over all bounded traces.")
    p.add_argument("source", help="Formula file (one per line) or 'builtin'.")
    p.add_argument("--alphabet", type=str, default=None, help="Comma-separated atoms.")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--engines", type=str, default=None,
                   help=f"Comma-separated subset of: {', '.join(ENGINE_NAMES)}.")
    p.add_argument("--random", type=int, nargs="?", const=None, default=0, metavar="N",
                   help="Add N random traces (RANDOM_TRACES when N is omitted).")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--metrics", type=str, default=None, help="JSON-lines metrics output.")
    p.set_defaults(fn=cmd_xcheck)

    p = sub.add_parser("emit-mso", help="Write a MONA program for the formula at position 0.")
    p.add_argument("formula")
    p.add_argument("--flavor", choices=("st", "enc"), default="st")
    p.set_defaults(fn=cmd_emit_mso)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level, args.log_file)
    logger = get_logger("dynauto.cli")
    try:
        if args.config and not Path(args.config).is_file():
            raise ConfigError(f"config file not found: {args.config}")
        config = load_config(args.config) if args.config else load_config()
        args.dialect = Dialect.parse(args.dialect or config.DEFAULT_DIALECT)
        return args.fn(args, config)
    except ResourceLimitError as exc:
        logger.error("resource limit: %s", exc)
        return EXIT_LIMIT
    except (DynautoError, ValueError, KeyError) as exc:
        logger.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
