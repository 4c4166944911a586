import random
from array import array

import pytest

from circramsey import _backend, _pykernels

KINDS = ([(0, k, 0) for k in range(2, 7)] + [(1, k, 0) for k in range(3, 8)]
         + [(2, k, 0) for k in range(3, 9)] + [(3, k, 0) for k in range(4, 8)]
         + [(4, a, b) for a in range(1, 4) for b in range(a, 5)])


def compiled():
    try:
        from circramsey import _kernels
    except ImportError:
        pytest.skip("compiled kernel not built")
    return _kernels


def fill_both(a, b, rng, n, c):
    p = rng.random()
    for u in range(n):
        for v in range(u + 1, n):
            r = rng.random()
            t = 0 if r < 0.1 else (1 if r < p else rng.randint(2, c))
            a.set(u, v, t)
            b.set(u, v, t)


def test_default_backend_is_compiled_when_built():
    kern = compiled()
    assert _backend.BitCore is kern.BitCore or _backend.BACKEND == "python"


@pytest.mark.parametrize("seed", range(4))
def test_kernels_agree(seed):
    kern = compiled()
    rng = random.Random(seed)
    for trial in range(60):
        # sizes straddle the 64-bit word boundaries of the compiled rows
        n = rng.choice([rng.randint(2, 14), rng.randint(60, 70), rng.randint(125, 135)])
        c = rng.randint(2, 3)
        a, b = _pykernels.BitCore(n, c), kern.BitCore(n, c)
        fill_both(a, b, rng, n, c)
        for t in range(1, c + 1):
            assert a.edge_count(t) == b.edge_count(t)
            assert a.triangle_count(t) == b.triangle_count(t)
            for v in range(n):
                assert a.row(t, v) == b.row(t, v)
                assert a.degree(t, v) == b.degree(t, v)
            for kind, p1, p2 in rng.sample(KINDS, 6):
                assert a.contains(t, kind, p1, p2) == b.contains(t, kind, p1, p2)
                u, v = rng.sample(range(n), 2)
                assert (a.contains_through(t, kind, p1, p2, u, v)
                        == b.contains_through(t, kind, p1, p2, u, v))


def test_set_pairs_and_copy_agree():
    kern = compiled()
    flat = array("i", [0, 1, 1, 2, 2, 3])
    for cls in (_pykernels.BitCore, kern.BitCore):
        core = cls(5, 2)
        core.set_pairs(flat, 2)
        twin = core.copy()
        core.set_pairs(flat, 0)
        assert [twin.get(0, 1), twin.get(1, 2), twin.get(3, 2)] == [2, 2, 2]
        assert core.get(0, 1) == 0


def test_both_kernels_reject_bad_input():
    kern = compiled()
    for cls in (_pykernels.BitCore, kern.BitCore):
        with pytest.raises(ValueError):
            cls(600, 2)
        core = cls(4, 2)
        with pytest.raises(ValueError):
            core.set(0, 0, 1)
        with pytest.raises(ValueError):
            core.set(0, 1, 5)
