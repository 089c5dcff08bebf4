import hypothesis
import pytest

hypothesis.settings.register_profile(
    "default", deadline=None, derandomize=True, max_examples=60
)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session", autouse=True)
def _warm_jit():
    # Compile the numba kernels once up front so JIT time doesn't get
    # billed to whichever test happens to touch them first (the acceptance
    # tests carry wall-clock budgets).
    from chaos_prng import _fast

    _fast.warmup()
