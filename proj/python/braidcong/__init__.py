"""Exact congruence tests for modular-group representations built from braid data.

Every eigenvalue, scaling, and spectrum entry is written as a string "k/n",
meaning the root of unity e^{2*pi*i*k/n}. No floats anywhere.
"""

import json as _json

try:
    from braidcong._braidcong import (
        catalog_json,
        classify_json,
        hsu_oracle,
        hsu_words,
        image_order,
    )
except ImportError:  # build-tree layout: extension module next to the package
    from _braidcong import (
        catalog_json,
        classify_json,
        hsu_oracle,
        hsu_words,
        image_order,
    )

__all__ = [
    "classify",
    "catalog",
    "hsu_words",
    "hsu_oracle",
    "image_order",
]


def classify(eigs, theta="", all_scalings=False, order_cap=1000, closure_cap=0):
    """Run the full pipeline on an eigenvalue list like ["1/4", "3/4"].

    Returns a list with one report dict per rescaling (one entry unless
    all_scalings is set). Report fields: spec, theta, po, spectrum, glevel,
    verdict, and image_order when closure_cap certified finiteness.
    """
    return _json.loads(classify_json(eigs, theta, all_scalings, order_cap, closure_cap))


def catalog():
    """All fixed-level catalog cases as a list of dicts."""
    return _json.loads(catalog_json())
