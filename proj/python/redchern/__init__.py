"""Reduced Chern classes of vector bundles and the universal polynomials
relating them to the Chern classes of S^n(E) (x) det(E)^-1.

Polynomials come back as dicts in the same JSON layout the command-line tool
emits: ``{"vars": [{"name", "degree"}...], "terms": [{"coeff", "exps"}...]}``
with coefficients as exact "p/q" strings.
"""

import json

from . import _redchern

__all__ = ["formula", "formula_text", "universal", "table", "verify", "run_cli"]


def formula(n, r):
    """cbar_r at rank n as a polynomial dict."""
    return json.loads(_redchern.formula(n, r, "json"))


def formula_text(n, r, latex=False):
    return _redchern.formula(n, r, "latex" if latex else "text")


def universal(n):
    """psi, phi, lead and N at rank n."""
    return json.loads(_redchern.universal(n, "json"))


def table(max_rank=4):
    """The regression table as a string (byte-identical to ``redchern table``)."""
    return _redchern.table(max_rank)


def verify(suite="all", max_rank=4, seed=0, fault=None):
    """Runs a verification suite; returns a list of report dicts."""
    return [json.loads(line) for line in _redchern.verify(suite, max_rank, seed, fault)]


def run_cli(args):
    """Runs the command line in-process; returns (exit_code, stdout, stderr)."""
    return _redchern.run_cli(list(args))
