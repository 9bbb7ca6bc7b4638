"""Reference values for dip_correlation tests.

Independent of the C++ code: exact rational arithmetic for the fixture,
then a float result for a splitmix64-generated series. Run with python3 and
paste the printed values into test_econ.cpp.
"""

from fractions import Fraction
import math

MASK = (1 << 64) - 1


def splitmix64(state):
    state = (state + 0x9E3779B97F4A7C15) & MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return state, z ^ (z >> 31)


def pearson(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    return sxy, sxx, syy


def exact(rows):
    """rows: [(year, gdp, wars_last3)] -> correlation as float from exact sums."""
    xs, ys = [], []
    prev = None
    for year, gdp, wars in rows:
        if prev is not None and prev[0] == year - 1:
            xs.append(Fraction(wars))
            ys.append((Fraction(gdp) - Fraction(prev[1])) / Fraction(prev[1]))
        prev = (year, gdp)
    sxy, sxx, syy = pearson(xs, ys)
    # r = sxy / sqrt(sxx * syy); evaluate the root in high precision.
    r2 = sxy * sxy / (sxx * syy)
    return math.copysign(math.sqrt(r2.numerator / r2.denominator), sxy)


def random_rows(seed, count):
    state = seed
    rows = []
    year = 1850
    for _ in range(count):
        state, a = splitmix64(state)
        state, b = splitmix64(state)
        state, c = splitmix64(state)
        year += 1 if c % 10 else 2  # occasional gaps
        gdp = 500 + a % 20000
        wars = b % 9
        rows.append((year, gdp, wars))
    return rows


if __name__ == "__main__":
    fixture = [(1999, 1000, 0), (2000, 1100, 0), (2001, 1050, 1), (2002, 990, 2),
               (2003, 940, 3), (2004, 1000, 2), (2005, 1080, 1)]
    print("fixture %.17g" % exact(fixture))
    rows = random_rows(20240601, 120)
    print("random %.17g" % exact(rows))
    print("random first rows", rows[:3])
