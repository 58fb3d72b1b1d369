"""SVG figures (vowel panels, vowel-space overlays, deviation surfaces)."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .generic_model import ALPHA  # noqa: E402

plt.rcParams["svg.hashsalt"] = "tractlab"
plt.rcParams["svg.fonttype"] = "path"

_C1_STYLE = dict(s=3, c="tab:blue", alpha=0.5, linewidths=0, label="C1")
_C2_STYLE = dict(s=3, c="0.55", alpha=0.6, linewidths=0, label="C2")


def _save(fig, path):
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def _fmt_coef(x):
    if abs(x - ALPHA) < 1e-9:
        return "α"
    if abs(x + ALPHA) < 1e-9:
        return "-α"
    return f"{x:g}" if abs(x - round(x)) > 1e-9 else f"{round(x) + 0:d}"


def vowel_figure(path, model_name, records, areas, coefficients=None):
    """Eight area-function panels plus the (f1, f2) chart of the vowels.

    ``coefficients`` maps a label to its (a1, a2) pair, printed on top of
    the panel when given.
    """
    fig = plt.figure(figsize=(12, 7))
    grid = fig.add_gridspec(2, 6)
    slots = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3)]
    for (row, col), rec, area in zip(slots, records, areas):
        ax = fig.add_subplot(grid[row, col])
        x = np.r_[0.0, np.repeat(np.arange(1, area.n) * area.tubelet_length_cm, 2),
                  area.total_length_cm]
        ax.plot(x, np.repeat(area.areas, 2), color="k", lw=1)
        title = f"[{rec.label}]"
        if coefficients and rec.label in coefficients:
            a1, a2 = coefficients[rec.label]
            title += f" ({_fmt_coef(a1)},{_fmt_coef(a2)})"
        ax.set_title(title, fontsize=9)
        ax.tick_params(labelsize=7)
    ax = fig.add_subplot(grid[:, 4:])
    f1 = [r.f1 for r in records]
    f2 = [r.f2 for r in records]
    ax.plot(f1 + f1[:1], f2 + f2[:1], "o-", color="k", ms=4, lw=0.8)
    for r in records:
        ax.annotate(f"[{r.label}]", (r.f1, r.f2), textcoords="offset points", xytext=(4, 4))
    ax.set_xlabel("f1 (Hz)")
    ax.set_ylabel("f2 (Hz)")
    ax.set_title(f"{model_name}: vowel space")
    fig.tight_layout()
    _save(fig, path)


def space_figure(path, model_name, ring, interior=(), c1=(), neutral=None, references=True):
    """(f1, f2) overlay: C1 scatter, C2 interior points, the rho = 1 ring.

    With ``references`` and a ``neutral`` FormantSet, adds the
    first-order curves from (a1, a2) and (a1~, a2~) and the biased estimate.
    """
    fig, ax = plt.subplots(figsize=(7, 6))
    if c1:
        ax.scatter([r.f1 for r in c1 if not r.failed], [r.f2 for r in c1 if not r.failed],
                   **_C1_STYLE)
    if interior:
        ax.scatter([r.f1 for r in interior if not r.failed],
                   [r.f2 for r in interior if not r.failed], **_C2_STYLE)
    ok = [r for r in ring if not r.failed]
    ax.plot([r.f1 for r in ok] + [ok[0].f1], [r.f2 for r in ok] + [ok[0].f2],
            color="k", lw=1.2, label="C2, rho=1")
    if references and neutral is not None:
        f1n, f2n = neutral.f1, neutral.f2
        theta = np.array([r.theta for r in ok] + [ok[0].theta])
        a1, a2 = 2.0 * np.cos(theta), ALPHA * np.sin(theta)
        at1 = np.array([r.dct.a1_tilde for r in ok] + [ok[0].dct.a1_tilde])
        at2 = np.array([r.dct.a2_tilde for r in ok] + [ok[0].dct.a2_tilde])
        ax.plot(f1n * (1 - a1 / 2), f2n * (1 - a2 / 2), ":", color="tab:green", label="SE (a)")
        ax.plot(f1n * (1 - at1 / 2), f2n * (1 - at2 / 2), "--", color="tab:olive",
                label="SE (a~)")
        ax.plot(f1n * (1 - at1 / 2 - at2 ** 2 / 4), f2n * (1 - at2 / 2), "-.",
                color="tab:red", label="est")
    if neutral is not None:
        ax.plot([neutral.f1], [neutral.f2], "k+", ms=10)
    ax.set_xlabel("f1 (Hz)")
    ax.set_ylabel("f2 (Hz)")
    ax.set_title(f"{model_name}: vowel space")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    _save(fig, path)


def deviation_figures(path_df1, path_df2, datasets):
    """df1 and df2 against (a1~, a2~); ``datasets`` maps a name to records."""
    for target, path in (("df1", path_df1), ("df2", path_df2)):
        fig = plt.figure(figsize=(7, 6))
        ax = fig.add_subplot(projection="3d")
        for name, records in datasets.items():
            ok = [r for r in records if not r.failed]
            is_c1 = all(r.condition == "C1" for r in ok)
            style = dict(_C1_STYLE if is_c1 else _C2_STYLE)
            style["label"] = name
            ax.scatter([r.dct.a1_tilde for r in ok], [r.dct.a2_tilde for r in ok],
                       [getattr(r.deviations, target) for r in ok], **style)
        ax.set_xlabel("a1~")
        ax.set_ylabel("a2~")
        ax.set_zlabel(target)
        ax.legend(fontsize=8)
        _save(fig, path)


def spectrum_figure(path, spec, found=None, title=""):
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(spec.frequencies, spec.magnitude_db, color="k", lw=1)
    if found is not None:
        for f in (found.f1, found.f2):
            ax.axvline(f, color="tab:red", lw=0.8, ls="--")
    ax.set_xlabel("frequency (Hz)")
    ax.set_ylabel("|U_lips / U_glottis| (dB)")
    ax.set_title(title)
    fig.tight_layout()
    _save(fig, path)
