"""Shared fixtures: the worked example, its two runs, and the MONA-shaped DFA."""

import pytest

from dynauto.automata import dfa_accepts, dfa_from_dot
from dynauto.logic import parse
from dynauto.trace import Trace, enumerate_traces

ALWAYS_NEXT_TEXT = "<(([step*] b)?) ; step> a"

# always b, and a at the second step; 1 initial, 2 sink, 4 accepting
MONA_DOT = """
digraph mona {
  node [shape = doublecircle]; 4;
  node [shape = circle]; 1; 2; 3;
  init [shape = plaintext, label = ""];
  init -> 1;
  1 -> 2 [label = "~b"];
  1 -> 3 [label = "b"];
  2 -> 2 [label = ""];
  3 -> 2 [label = "~b"];
  3 -> 2 [label = "b & ~a"];
  3 -> 4 [label = "b & a"];
  4 -> 2 [label = "~b"];
  4 -> 4 [label = "b"];
}
"""


@pytest.fixture
def always_next():
    return parse(ALWAYS_NEXT_TEXT)


@pytest.fixture
def accepted_trace():
    return Trace.of([{"b"}, {"a", "b"}, {"b"}], {"a", "b"})


@pytest.fixture
def rejected_trace():
    return Trace.of([{"b"}, {"a"}, {"b"}], {"a", "b"})


@pytest.fixture
def mona_dfa():
    return dfa_from_dot(MONA_DOT)


@pytest.fixture(scope="session")
def traces_ab_3():
    return list(enumerate_traces({"a", "b"}, 3))


@pytest.fixture(scope="session")
def traces_ab_4():
    return list(enumerate_traces({"a", "b"}, 4))


@pytest.fixture
def same_language():
    """Bounded language equality of two DFAs."""
    def check(left, right, alphabet=("a", "b"), max_len=4):
        return all(dfa_accepts(left, t) == dfa_accepts(right, t)
                   for t in enumerate_traces(alphabet, max_len))
    return check
