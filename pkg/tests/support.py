"""Deterministic random-state helpers shared across test modules."""
import math

from spincat import (
    CatParams,
    CoherentParams,
    DegenerateCatError,
    Generator,
    SpinJ,
    cat_crb,
)


def random_coherent(rng) -> CoherentParams:
    return CoherentParams(
        float(rng.uniform(0.0, math.pi)), float(rng.uniform(0.0, 2 * math.pi))
    )


def random_cat(rng, max_two_j: int = 10, min_qfi: float = 1e-2, generator=None):
    """Rejection-sample a non-degenerate cat whose information content stays
    clear of divergences (for the given generator, or all three)."""
    gens = [generator] if generator is not None else list(Generator)
    while True:
        j = SpinJ(int(rng.integers(1, max_two_j + 1)))
        cat = CatParams(j, random_coherent(rng), random_coherent(rng))
        try:
            results = [cat_crb(cat, g) for g in gens]
        except DegenerateCatError:
            continue
        if all(r.qfi > min_qfi for r in results):
            return cat
