"""Exact chord-diagram enumeration on multiple backbones.

Thin wrapper over the C++ extension. Counts and series coefficients
cross the boundary as strings ("num" or "num/den"); the helpers here
turn them into ints and fractions.Fraction.
"""

import importlib
import os
import sys
from fractions import Fraction

_ext = None


def _load_extension():
    global _ext
    if _ext is not None:
        return _ext
    ext_dir = os.environ.get("CHORDCOUNT_EXT_DIR")
    if ext_dir and ext_dir not in sys.path:
        sys.path.insert(0, ext_dir)
    try:
        _ext = importlib.import_module("chordcount._chordcount")
    except ImportError:
        _ext = importlib.import_module("_chordcount")
    return _ext


def _fractions(values):
    return [Fraction(v) for v in values]


def evolve_table(model, variant, max_k, max_backbones=1, max_weight=8,
                 one_backbone=0):
    rows = _load_extension().evolve_table(model, variant, max_k, max_backbones,
                                          max_weight, one_backbone)
    for row in rows:
        row["count"] = int(row["count"])
    return rows


def oracle_table(backbones, k, variant="orientable", connected_only=True):
    rows = _load_extension().oracle_table(list(backbones), k, variant,
                                          connected_only)
    for row in rows:
        row["count"] = int(row["count"])
    return rows


def one_backbone_count(g, k, n_spec):
    return int(_load_extension().one_backbone_count(g, k, list(n_spec)))


def validate_type(variant, g_or_h, k, l, b_spec, n_spec, p_spec=None):
    return _load_extension().validate_type(variant, g_or_h, k, l, list(b_spec),
                                           list(n_spec), p_spec)


def exact_moment(m, variant="orientable"):
    return _load_extension().exact_moment(m, variant)


def sample_trace_powers(ensemble, N, p, s, m, samples=10000, seed=1):
    return _load_extension().sample_trace_powers(ensemble, N, p, s, m, samples,
                                                 seed)


def r_transform(moments, order):
    ext = _load_extension()
    return _fractions(ext.r_transform([str(Fraction(x)) for x in moments], order))


def free_add(a, b, order):
    ext = _load_extension()
    return _fractions(ext.free_add([str(Fraction(x)) for x in a],
                                   [str(Fraction(x)) for x in b], order))


def free_mul(a, b, order):
    ext = _load_extension()
    return _fractions(ext.free_mul([str(Fraction(x)) for x in a],
                                   [str(Fraction(x)) for x in b], order))


def genus0_length_gf(weights, order):
    ext = _load_extension()
    return _fractions(ext.genus0_length_gf([str(Fraction(w)) for w in weights],
                                           order))


def semicircle_moments(order):
    return _fractions(_load_extension().semicircle_moments(order))


def marchenko_pastur_moments(order):
    return _fractions(_load_extension().marchenko_pastur_moments(order))


def run_checks(suite="all", samples=200000, seed=7):
    return _load_extension().run_checks(suite, samples, seed)
