import math
import random

import pytest

from geokgon.surface import DiskSurface, Face, PolygonSurface, SurfacePoint


def random_interior_point(surface, rng: random.Random) -> SurfacePoint:
    """Uniform-ish random point strictly inside one face."""
    face = Face.FRONT if rng.random() < 0.5 else Face.BACK
    if isinstance(surface, DiskSurface):
        r = surface.radius * 0.999 * math.sqrt(rng.random())
        phi = 2.0 * math.pi * rng.random()
        return SurfacePoint(face, r * math.cos(phi), r * math.sin(phi))
    R = surface.circumradius
    while True:
        x = rng.uniform(-R, R)
        y = rng.uniform(-R, R)
        if surface.contains(0.999 * x, 0.999 * y):
            return SurfacePoint(face, 0.999 * x, 0.999 * y)


@pytest.fixture(scope="session")
def pentagon():
    return PolygonSurface.with_inradius(5)


@pytest.fixture(scope="session")
def triangle():
    return PolygonSurface.with_inradius(3)


@pytest.fixture(scope="session")
def square():
    return PolygonSurface.with_inradius(4)


@pytest.fixture(scope="session")
def disk():
    return DiskSurface(1.0)
