"""
Cosine coefficients of area functions and formant deviations.

The coefficients are the plain sums

    a1~ = 2/n sum_{i=1..n} A_i cos(pi i / n)
    a2~ = 2/n sum_{i=1..n} A_i cos(3 pi i / n)

over the tubelets in glottis-to-lips order. Note the index convention: a
uniform unit tube gives ``a1~ = a2~ = -2/n`` rather than 0, because only the
``i = n`` term survives the pairwise cancellation.
"""

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import InvalidInputError

__all__ = [
    "CALIBRATED_THRESHOLDS",
    "DctPair",
    "DeviationPair",
    "FunctionalReport",
    "dct_coefficients",
    "relative_deviations",
    "se_estimate",
    "functional_check",
    "within_bin_spread",
]


@dataclass(frozen=True)
class DctPair:
    a1_tilde: float
    a2_tilde: float


@dataclass(frozen=True)
class DeviationPair:
    df1: float
    df2: float


def dct_coefficients(area):
    """First two odd cosine coefficients of an area function.

    ``area`` may be a :class:`SampledAreaFunction` or a plain sequence of
    tubelet areas.
    """
    values = np.asarray(getattr(area, "areas", area), dtype=float)
    n = values.size
    i = np.arange(1, n + 1)
    a1 = 2.0 / n * np.dot(values, np.cos(np.pi * i / n))
    a2 = 2.0 / n * np.dot(values, np.cos(3.0 * np.pi * i / n))
    return DctPair(float(a1), float(a2))


def relative_deviations(f, f_neutral):
    """``(f_i - f_in) / f_in`` for the first two formants."""
    if not (f_neutral.f1 > 0 and f_neutral.f2 > 0):
        raise InvalidInputError("neutral formants must be positive")
    return DeviationPair((f.f1 - f_neutral.f1) / f_neutral.f1,
                         (f.f2 - f_neutral.f2) / f_neutral.f2)


def se_estimate(pair, biased=True):
    """Predicted deviations from the cosine coefficients.

    With ``biased=True``: ``df1 = -a1/2 - a2**2/4``, ``df2 = -a2/2``.
    With ``biased=False`` the first-order relation ``df_i = -a_i/2``.
    """
    df1 = -0.5 * pair.a1_tilde
    if biased:
        df1 -= 0.25 * pair.a2_tilde ** 2
    return DeviationPair(df1, -0.5 * pair.a2_tilde)


@dataclass
class FunctionalReport:
    """Outcome of :func:`functional_check`.

    ``bins`` holds one entry per occupied bin with at least two records:
    the bin key, its record count and the df1/df2 spreads (max - min).
    """

    bin_width: float
    threshold: float
    n_records: int
    n_bins: int
    percentile: float
    spread_df1_p95: float
    spread_df2_p95: float
    spread_p95: float
    functional: bool
    bins: list = field(default_factory=list)

    def to_json(self, **kwargs):
        return json.dumps(asdict(self), **kwargs)


def within_bin_spread(a1, a2, df1, df2, bin_width):
    """Per-bin df spreads for points binned on a square grid in (a1~, a2~).

    Bins are keyed by floor division, so the result does not depend on the
    order of the records. Returns a list of ``(key, count, spread1, spread2)``
    for bins holding at least two points, sorted by key.
    """
    keys = np.stack([np.floor(np.asarray(a1) / bin_width),
                     np.floor(np.asarray(a2) / bin_width)], axis=1).astype(np.int64)
    df1 = np.asarray(df1, dtype=float)
    df2 = np.asarray(df2, dtype=float)
    uniq, inverse, counts = np.unique(keys, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.ravel()
    out = []
    for b, key in enumerate(uniq):
        if counts[b] < 2:
            continue
        members = inverse == b
        out.append(((int(key[0]), int(key[1])), int(counts[b]),
                    float(np.ptp(df1[members])), float(np.ptp(df2[members]))))
    return out


def functional_check(records, bin_width=0.05, threshold=0.05, percentile=95.0):
    """Test whether (df1, df2) behaves as a function of (a1~, a2~).

    Records that failed formant extraction are ignored. Each bin's spread is
    the larger of its df1 and df2 ranges; the dataset is functional when the
    ``percentile`` of those spreads is below ``threshold``.
    """
    if not bin_width > 0:
        raise InvalidInputError("bin_width must be positive")
    good = [r for r in records if not r.failed]
    if len(good) < 100:
        raise InvalidInputError(f"functional_check needs at least 100 records, got {len(good)}")
    a1 = [r.dct.a1_tilde for r in good]
    a2 = [r.dct.a2_tilde for r in good]
    df1 = [r.deviations.df1 for r in good]
    df2 = [r.deviations.df2 for r in good]
    bins = within_bin_spread(a1, a2, df1, df2, bin_width)
    if bins:
        s1 = np.array([b[2] for b in bins])
        s2 = np.array([b[3] for b in bins])
        p1 = float(np.percentile(s1, percentile))
        p2 = float(np.percentile(s2, percentile))
        p = float(np.percentile(np.maximum(s1, s2), percentile))
    else:
        p1 = p2 = p = 0.0
    return FunctionalReport(
        bin_width=float(bin_width), threshold=float(threshold), n_records=len(good),
        n_bins=len(bins), percentile=float(percentile), spread_df1_p95=p1,
        spread_df2_p95=p2, spread_p95=p, functional=bool(p < threshold),
        bins=[{"key": list(k), "count": c, "spread_df1": s1_, "spread_df2": s2_}
              for k, c, s1_, s2_ in bins],
    )


#: Default ``functional_check`` thresholds per model (bin width 0.05). Set
#: between the C2 and C1 95th-percentile spreads of a 5000-draw run.
CALIBRATED_THRESHOLDS = {"generic": 0.05, "drm": 0.05, "fant": 0.8}
