"""Exact kernels, identity checks and ODEs for Rodrigues-type function families.

Families and bilateral specs are plain dicts in the same shape as the CLI's
JSON files. Polynomials come back as lists of term lists, one per power of x,
each term a dict with keys La, Lb, n and coef.
"""

import json
from fractions import Fraction

from . import _core
from ._core import InputError, PreconditionError

__all__ = [
    "InputError",
    "PreconditionError",
    "apostol_bernoulli",
    "kernel_strings",
    "kernels",
    "ode_residual",
    "residual",
    "sweep",
    "synthesize_ode",
    "theta_eval",
    "verify_bilateral",
    "verify_genfun",
]


def _enc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def kernels(family, n):
    return json.loads(_core.kernels(_enc(family), n))


def kernel_strings(family, n):
    return _core.kernel_strings(_enc(family), n)


def theta_eval(family, n, x):
    return _core.theta_eval(_enc(family), n, float(x))


def verify_genfun(family, order=16):
    return json.loads(_core.verify_genfun(_enc(family), order))


def sweep(family, n_max=12):
    return json.loads(_core.sweep(_enc(family), n_max))


def residual(identity, family, n):
    return json.loads(_core.residual(identity, _enc(family), n))


def synthesize_ode(family, m, specialize=False):
    return json.loads(_core.synthesize_ode(_enc(family), m, specialize))


def ode_residual(ode, family, n):
    return json.loads(_core.ode_residual(_enc(ode), _enc(family), n))


def verify_bilateral(spec, family, order_t=8, order_eta=8):
    return json.loads(_core.verify_bilateral(_enc(spec), _enc(family), order_t, order_eta))


def apostol_bernoulli(n, order=1, lam=1):
    """Coefficients of the polynomial in y, lowest power first, as Fractions."""
    return [Fraction(c) for c in _core.apostol_bernoulli(n, order, str(Fraction(lam)))]
