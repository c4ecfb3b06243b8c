"""Opt-in adapter: run an installed MONA binary and import its DFA.

Never used by the default pipeline or the test suite.
"""

from __future__ import annotations

import logging
import shutil
import subprocess
import tempfile
from pathlib import Path

from ..errors import ConfigError, DotFormatError
from .dfa import Dfa
from .dot import dfa_from_dot

logger = logging.getLogger("dynauto.automata")


def run_mona(program: str, variable_order: list[str], binary: str = "mona",
             timeout: float = 60.0) -> Dfa:
    """Compile MONA `program` and read back the DFA it prints in DOT form.

    `variable_order` lists the free second-order variables in declaration
    order; MONA's bit-string edge labels are decoded against it.
    """
    executable = shutil.which(binary)
    if executable is None:
        raise ConfigError(f"MONA binary {binary!r} not found on PATH")
    with tempfile.TemporaryDirectory() as tmp:
        source = Path(tmp) / "formula.mona"
        source.write_text(program, encoding="utf-8")
        result = subprocess.run([executable, "-gw", str(source)], capture_output=True,
                                text=True, timeout=timeout, check=False)
    if result.returncode != 0:
        raise ConfigError(f"mona failed ({result.returncode}): {result.stderr.strip()[:200]}")
    start = result.stdout.find("digraph")
    if start < 0:
        raise DotFormatError("mona produced no DOT graph")
    logger.debug("mona finished: %d bytes of DOT", len(result.stdout) - start)
    return dfa_from_dot(result.stdout[start:], atoms=variable_order, variable_order=variable_order)
