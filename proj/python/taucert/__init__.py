"""Exact tau-equation tools.

Thin wrappers over the compiled module: arguments that are JSON documents may be passed as
Python objects, and results come back decoded. Domain errors raise TaucertError.
"""

import json

from . import _taucert

__all__ = [
    "TaucertError",
    "catalog_list",
    "catalog_terms",
    "catalog_verify",
    "derive",
    "derive_entry",
    "certify",
    "certify_entry",
    "telescope",
    "summable",
    "ratsolve",
    "trigamma",
    "check_bernoulli_solution",
    "check_telescoping",
    "check_asymptotic",
    "accept",
]


class TaucertError(ValueError):
    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _param(v):
    return None if v is None else str(v)


def _decode(raw):
    out = json.loads(raw)
    if isinstance(out, dict) and "error" in out and len(out) == 1:
        raise TaucertError(out["error"]["code"], out["error"]["message"])
    return out


def catalog_list():
    return _decode(_taucert.catalog_list())


def catalog_terms(name, x=None, gamma=None, n=20):
    return _decode(_taucert.catalog_terms(name, _param(x), _param(gamma), n))


def catalog_verify(name, x=None, gamma=None, order=64):
    return _decode(_taucert.catalog_verify(name, _param(x), _param(gamma), order))


def derive(egf, x=None, verify_order=None):
    return _decode(_taucert.derive(_text(egf), _param(x), verify_order))


def derive_entry(name, x=None, gamma=None, verify_order=None):
    return _decode(_taucert.derive_entry(name, _param(x), _param(gamma), verify_order))


def certify(equation, series, order=64):
    return _decode(_taucert.certify(_text(equation), _text(series), order))


def certify_entry(name, x=None, gamma=None, order=64):
    return _decode(_taucert.certify_entry(name, _param(x), _param(gamma), order))


def telescope(f, n_max=6, beta="1"):
    return _decode(_taucert.telescope(_text(f), n_max, str(beta)))


def summable(h, beta="1"):
    return _decode(_taucert.summable(_text(h), str(beta)))


def ratsolve(a, f, beta="1"):
    return _decode(_taucert.ratsolve(_text(a), _text(f), str(beta)))


def trigamma(z):
    return _decode(_taucert.trigamma(z))["trigamma"]


def check_bernoulli_solution(x, samples):
    return _decode(_taucert.check_bernoulli_solution(x, list(samples)))


def check_telescoping(x, t, n=10):
    return _decode(_taucert.check_telescoping(x, t, n))


def check_asymptotic(M=3, samples=(10, 20, 40)):
    return _decode(_taucert.check_asymptotic(M, list(samples)))


def accept(filter=""):
    return _decode(_taucert.accept(filter))
