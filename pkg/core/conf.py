"""
Accessors for the lab's computation limits.

Every limit lives in settings (see ``Tracepi_lab.settings.base``); callers
may always pass an explicit override.
"""
from django.conf import settings

from core.exceptions import BudgetExceededError, DegreeCapExceededError


def mt_degree_cap():
    return getattr(settings, 'TRACEPI_MT_DEGREE_CAP', 6)


def ideal_degree_cap():
    return getattr(settings, 'TRACEPI_IDEAL_DEGREE_CAP', 5)


def evaluation_budget():
    return getattr(settings, 'TRACEPI_EVALUATION_BUDGET', 10_000_000)


def default_seed():
    return getattr(settings, 'TRACEPI_DEFAULT_SEED', 20210)


def check_degree(n, cap, what):
    """Raise DegreeCapExceededError when ``n`` is above ``cap``."""
    if n < 0:
        raise ValueError(f'{what}: degree must be non-negative, got {n}')
    if n > cap:
        raise DegreeCapExceededError(
            f'{what}: degree {n} is above the configured cap {cap}'
        )


def check_budget(cost, budget, what):
    if cost > budget:
        raise BudgetExceededError(
            f'{what}: needs {cost} evaluations, budget is {budget}'
        )
