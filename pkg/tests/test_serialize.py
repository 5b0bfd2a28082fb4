import random

import pytest

from fincard.errors import ParseError
from fincard.ground import Family
from fincard.phi import MixedFamily, phi_encode
from fincard.schedule import schedule_compact
from fincard.serialize import dumps, loads


def test_empty_family():
    text = dumps(Family.empty(3, (1,)))
    assert text == "#fincard family n=1 K=- ground=3 schedule=- shape=⟨1⟩\n"
    assert loads(text)[0] == Family.empty(3, (1,))


def test_singleton_family():
    text = dumps(Family.of(3, (1,), [[{0}]]))
    assert text.splitlines()[1:] == ["⟨{0}⟩"]


def random_mixed(rng):
    n = rng.randint(1, 2)
    g = rng.randint(1, 5)
    tuples = []
    for _ in range(rng.randint(0, 6)):
        tuples.append([set(rng.sample(range(g), rng.randint(0, min(2, g)))) for _ in range(n)])
    return MixedFamily.from_tuples(n, g, tuples), g


def test_mixed_roundtrip_random():
    rng = random.Random(11)
    for _ in range(1000):
        X, g = random_mixed(rng)
        text = dumps(X, ground=g, K=2, schedule="compact")
        back, header = loads(text)
        assert back == X and header.ground == g and header.K == 2
        assert dumps(back, ground=g, K=2, schedule="compact") == text


def test_coded_roundtrip():
    X = MixedFamily.from_tuples(1, 8, [[{0}], [set()]])
    C = phi_encode(X, 8, schedule_compact(1, 1))
    text = dumps(C, ground=8, K=1, schedule="compact")
    assert loads(text)[0] == C


@pytest.mark.parametrize(
    "text,line,column",
    [
        ("#fincard family n=1 K=- ground=3 schedule=- shape=⟨1⟩\n⟨{0}\n", 2, 5),
        ("#fincard family n=1 K=- ground=3 schedule=- shape=⟨1⟩\n⟨{1,0}⟩\n", 2, 7),
        ("#fincard family n=1 K=- ground=3 schedule=- shape=⟨1⟩\n⟨{0}⟩\n⟨{0}⟩\n", 3, 1),
        ("#fincard mixed n=1 K=1 ground=3 schedule=-\n⟨{0}⟩\n", 2, 1),
        ("#fincard blob n=1 K=1 ground=3 schedule=-\n", 1, 10),
        ("#fincard coded n=1 K=1 ground=3 schedule=-\n{{7}}\n", 2, 1),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as err:
        loads(text)
    assert (err.value.line, err.value.column) == (line, column)
