import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dellcurves.algebra import Poly, field_from_q, iter_monic_irreducibles  # noqa: E402
from dellcurves.invariants import RamData  # noqa: E402
from dellcurves.places import Place  # noqa: E402

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def poly(F, *ints):
    return Poly.from_ints(F, ints)


def place(F, *ints):
    return Place.finite(Poly.from_ints(F, ints))


def random_poly(rng, F, max_deg, monic=False, nonzero=False):
    while True:
        d = rng.randint(0, max_deg)
        cs = [rng.randrange(F.q) for _ in range(d + 1)]
        if monic:
            cs[-1] = 1
        f = Poly(F, cs)
        if not nonzero or not f.is_zero():
            return f


def places_up_to(F, max_deg):
    return [Place(F, f) for d in range(1, max_deg + 1) for f in iter_monic_irreducibles(F, d)]


def random_ram(rng, F, max_deg=3, size=2, odd=None):
    pool = places_up_to(F, max_deg)
    if odd is not None:
        pool = [v for v in pool if v.deg % 2] if odd else pool
    while True:
        R = rng.sample(pool, size)
        ram = RamData.make(F, R)
        if odd is None or ram.odd_flag == int(odd):
            return ram


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def F3():
    return field_from_q(3)


@pytest.fixture
def F5():
    return field_from_q(5)


@pytest.fixture
def F4():
    return field_from_q(4)
