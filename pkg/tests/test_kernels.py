import pytest

from zigzagmetric import _kernels, _pykernels

from oracles import random_word, seeded

try:
    from zigzagmetric import _ckernels
except ImportError:
    _ckernels = None

needs_compiled = pytest.mark.skipif(
    _ckernels is None, reason="compiled kernels not built"
)


def test_some_backend_selected():
    assert _kernels.BACKEND in ("compiled", "python")


@needs_compiled
def test_backends_agree_on_subword_and_member():
    rng = seeded(70)
    for _ in range(500):
        u, v = random_word(rng, 5), random_word(rng, 7)
        assert _ckernels.subword(u, v) == _pykernels.subword(u, v)
        gens = [random_word(rng, 4) for _ in range(3)]
        w = random_word(rng, 6)
        assert _ckernels.member(w, gens) == _pykernels.member(w, gens)


@needs_compiled
def test_backends_agree_on_min_antichain():
    rng = seeded(71)
    for _ in range(300):
        words = [random_word(rng, 5) for _ in range(rng.randint(0, 8))]
        assert _ckernels.min_antichain(words) == _pykernels.min_antichain(
            words
        )


@needs_compiled
def test_backends_agree_on_cancellation_search():
    rng = seeded(72)
    for _ in range(300):
        gens = _pykernels.min_antichain(
            random_word(rng, 4) for _ in range(rng.randint(1, 3))
        )
        assert _ckernels.cancellation_search(
            gens, 10
        ) == _pykernels.cancellation_search(gens, 10)
