import random
from fractions import Fraction
from pathlib import Path

import pytest

from sislne.algebra import MPoly
from sislne.core import SisInput, decide_lne

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"
VARS = ("x", "y", "z")

# filled by tests/test_acceptance.py, printed at the end of the session
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")


def line(a, b, c) -> MPoly:
    return MPoly(VARS, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})


def random_lines(rng: random.Random, n: int) -> list[tuple[int, int, int]]:
    """n pairwise distinct projective lines with small integer coefficients."""
    out: list[tuple[int, int, int]] = []
    while len(out) < n:
        v = tuple(rng.randint(-3, 3) for _ in range(3))
        if v == (0, 0, 0):
            continue
        if any(_proportional(v, w) for w in out):
            continue
        out.append(v)
    return out


def _proportional(v, w) -> bool:
    return all(v[i] * w[j] == v[j] * w[i] for i in range(3) for j in range(3))


def intersection_oracle(lines) -> dict[tuple, int]:
    """Brute force: pairwise cross products, grouped; value = lines through the point."""
    pts = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            a, b = lines[i], lines[j]
            p = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
            last = next(c for c in reversed(p) if c != 0)
            key = tuple(Fraction(c, last) for c in p)
            pts[key] = 0
    for key in pts:
        pts[key] = sum(1 for l in lines if sum(c * x for c, x in zip(l, key)) == 0)
    return pts


def arrangement_input(lines, tail=(1, 2, 5)) -> SisInput:
    factors = [line(*l) for l in lines]
    labels = tuple(f"{a}*x + {b}*y + {c}*z" for a, b, c in lines)
    fd = MPoly.constant(VARS, 1)
    for g in factors:
        fd = fd * g
    fd1 = line(*tail) ** (len(lines) + 1)
    return SisInput(fd, fd1, tuple(factors), labels)


def random_arrangements(count: int, seed: int = 2024, sizes=(2, 3, 4, 5, 6)):
    """Seeded random arrangements that are superisolated for the chosen tail."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        lines = random_lines(rng, rng.choice(sizes))
        tail = tuple(rng.randint(-4, 4) for _ in range(3))
        if tail == (0, 0, 0):
            continue
        inp = arrangement_input(lines, tail)
        out.append((lines, tail, inp))
    return out


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def ex41():
    return decide_lne(SisInput.from_factors(["x", "y", "x + y", "x - y"], "z^5"))


@pytest.fixture(scope="session")
def ex42():
    return decide_lne(SisInput.from_factors(["x", "y", "x^2 + y^2 + z^2"], "z^5"))


@pytest.fixture(scope="session")
def ex43():
    return decide_lne(SisInput.from_factors(["x^2 + 2*y^2", "2*x^2 + y^2"], "z^5"))


@pytest.fixture(scope="session")
def ex44():
    return decide_lne(SisInput.from_factors(["x", "y", "x + y + z", "x - y - z"], "z^5"))
