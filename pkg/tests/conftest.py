"""Shared helpers: builders, random generators, and independent oracles."""

from fractions import Fraction

from zonotile import RATIONALS, Field, PlaneVector, Zonotope, vector

Q = RATIONALS
F2 = Field([2])
F23 = Field([2, 3])


def V(x, y, field=Q):
    return vector(field, x, y)


def rand_fraction(rng, max_num=8, max_den=4):
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def rand_element(rng, field, max_num=6, max_den=3, density=0.7):
    coeffs = {}
    for mask in range(field.size):
        if rng.random() < density:
            coeffs[mask] = rand_fraction(rng, max_num, max_den)
    return field.element(coeffs)


def sort_by_argument(gens):
    """Insertion sort of upper-half-plane vectors by exact argument order."""
    out = []
    for g in gens:
        i = 0
        while i < len(out) and out[i].cross(g).sign() > 0:
            i += 1
        out.insert(i, g)
    return out


def upper_half(v):
    sy = v.y.sign()
    if sy < 0 or (sy == 0 and v.x.sign() < 0):
        return -v
    return v


def random_zonotope(rng, field=Q, m=None, pool=None):
    """A random valid zonotope with generators drawn from a coordinate pool."""
    if m is None:
        m = rng.choice([2, 3, 4])
    if pool is None:
        pool = [Fraction(n, 2) for n in range(-3, 4)]
    gens = []
    guard = 0
    while len(gens) < m:
        guard += 1
        if guard > 500:
            raise RuntimeError("random zonotope generation stalled")
        v = V(rng.choice(pool), rng.choice(pool), field)
        if v.is_zero():
            continue
        v = upper_half(v)
        if any(g.cross(v).is_zero() for g in gens):
            continue
        gens.append(v)
    return Zonotope(sort_by_argument(gens))


def random_irrational_zonotope(rng, field, m):
    """Random zonotope with sparse irrational generator coordinates."""
    gens = []
    guard = 0
    while len(gens) < m:
        guard += 1
        if guard > 800:
            raise RuntimeError("random zonotope generation stalled")
        v = PlaneVector(
            rand_element(rng, field, max_num=3, max_den=2, density=0.4),
            rand_element(rng, field, max_num=3, max_den=2, density=0.4),
        )
        if v.is_zero():
            continue
        v = upper_half(v)
        if any(g.cross(v).is_zero() for g in gens):
            continue
        gens.append(v)
    return Zonotope(sort_by_argument(gens))


def shoelace_area(vertices):
    field = vertices[0].field
    doubled = field.zero()
    for i in range(len(vertices)):
        doubled = doubled + vertices[i].cross(vertices[(i + 1) % len(vertices)])
    return abs(doubled) / 2


def signed_pair_translation(shifts, idx):
    """shifts[j] continued with the sign convention t_{j+m} = -t_j (1-based idx)."""
    m = len(shifts)
    k = (idx - 1) % (2 * m)
    return shifts[k] if k < m else -shifts[k - m]


def flatten_vector(v):
    return [Fraction(c) for c in (v.x.coeffs + v.y.coeffs)]


def sympy_rank(vectors):
    from sympy import Matrix, Rational

    rows = [
        [Rational(c.numerator, c.denominator) for c in flatten_vector(v)] for v in vectors
    ]
    return Matrix(rows).rank()


def lattice_window_points(lat, bound):
    """All lattice points a*b1 + b*b2 with |a|, |b| small, kept in [-bound, bound]^2."""
    out = []
    coeff = 3 * bound + 6
    for a in range(-coeff, coeff + 1):
        for b in range(-coeff, coeff + 1):
            p = lat.point(a, b)
            if (
                abs(p.x) <= bound
                and abs(p.y) <= bound
            ):
                out.append((p.x, p.y))
    return set(out)
