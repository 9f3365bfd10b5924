import math

import pytest

from hwkit.evaluate import make_evaluator


@pytest.fixture(scope="session")
def evals40():
    """Order-40 evaluators on |log rho| <= 2 (uniform high accuracy)."""
    dom = (math.exp(-2.0), math.exp(2.0))
    return make_evaluator("F", 40, dom), make_evaluator("G", 40, dom)


@pytest.fixture(scope="session")
def evals_pricing():
    """The benchmark pricing configuration: order 6 on [0.04, 32.88]."""
    return make_evaluator("F", 6), make_evaluator("G", 6)
