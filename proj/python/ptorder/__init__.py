"""Exact bi-orderings of once-punctured-torus bundle groups.

Thin wrapper over the compiled core: free-group words, Magnus expansions,
abelian-cover winding numbers, the standard and non-standard bi-orders, and
the seeded verification suites.
"""

import json as _json

from ._core import (
    Monodromy,
    NotInCommutatorSubgroup,
    Order,
    OrderConfigError,
    ResourceLimitError,
    Word,
    WordParseError,
    check_lemma_witnesses as _check_lemma_witnesses,
    commutator,
    conjugate,
    in_lcs,
    leading_part,
    magnus_depth,
    magnus_dump,
    p2,
    p2_oracle,
    parse_word,
    render,
    run_suite as _run_suite,
    winding_total,
)

__all__ = [
    "Monodromy",
    "NotInCommutatorSubgroup",
    "Order",
    "OrderConfigError",
    "ResourceLimitError",
    "Word",
    "WordParseError",
    "check_lemma_witnesses",
    "commutator",
    "conjugate",
    "in_lcs",
    "leading_part",
    "magnus_depth",
    "magnus_dump",
    "p2",
    "p2_oracle",
    "parse_word",
    "render",
    "run_suite",
    "winding_total",
]


def run_suite(suite, samples=1000, seed=0, selector="", **config):
    """Run a verification suite; returns the report as a dict."""
    return _json.loads(_run_suite(suite, samples, seed, selector, **config))


def check_lemma_witnesses(**config):
    """Run the lemma witness checks; returns the report as a dict."""
    return _json.loads(_check_lemma_witnesses(**config))
