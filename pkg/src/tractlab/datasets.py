"""
File formats: area-function, spectrum and dataset CSVs, JSON configs.

Dataset CSVs start with ``#`` comment lines echoing the run configuration,
then the header::

    condition,index,rho,theta,p1,p2,p3,p4,a1t,a2t,f1,f2,df1,df2,failed

Floats are written with ``repr`` so files round-trip exactly and identical
runs give identical bytes. Unused parameter slots and missing values are
left empty. Vowel-sweep rows use the condition ``vowel:<label>``.
"""

import csv
import json
import math

import numpy as np

from .acoustics import AcousticConstants, FormantSet
from .analysis import DctPair, DeviationPair
from .errors import DatasetParseError, InvalidConfigError
from .generic_model import GenericConfig
from .tube_models import FantGeometry

__all__ = [
    "DATASET_COLUMNS",
    "write_area_csv",
    "write_spectrum_csv",
    "write_dataset_csv",
    "read_dataset_csv",
    "load_config",
    "model_options",
]

DATASET_COLUMNS = ("condition", "index", "rho", "theta", "p1", "p2", "p3", "p4",
                   "a1t", "a2t", "f1", "f2", "df1", "df2", "failed")


def _fmt(x):
    if x is None:
        return ""
    x = float(x)
    return "" if math.isnan(x) else repr(x)


def write_area_csv(path, area):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["index", "x_cm", "area_cm2"])
        for i, (x, a) in enumerate(zip(area.positions(), area.areas), start=1):
            w.writerow([i, _fmt(x), _fmt(a)])


def write_spectrum_csv(path, spec):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["f_hz", "re", "im", "mag_db"])
        for f, v, db in zip(spec.frequencies, spec.values, spec.magnitude_db):
            w.writerow([_fmt(f), _fmt(v.real), _fmt(v.imag), _fmt(db)])


def write_dataset_csv(path, records, header=None):
    """Write records; ``header`` is a dict echoed as ``# key: json`` lines."""
    with open(path, "w", newline="") as fh:
        for key, value in (header or {}).items():
            fh.write(f"# {key}: {json.dumps(value, sort_keys=True)}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(DATASET_COLUMNS)
        for r in records:
            params = list(r.params) + [None] * (4 - len(r.params))
            w.writerow([f"vowel:{r.label}" if r.label else r.condition,
                        r.index, _fmt(r.rho), _fmt(r.theta), *map(_fmt, params),
                        _fmt(r.dct.a1_tilde), _fmt(r.dct.a2_tilde), _fmt(r.f1), _fmt(r.f2),
                        _fmt(r.deviations.df1), _fmt(r.deviations.df2), int(bool(r.failed))])


def _parse_float(text, line, column):
    if text == "":
        return float("nan")
    try:
        return float(text)
    except ValueError:
        raise DatasetParseError(f"column {column!r}: not a number: {text!r}", line) from None


def read_dataset_csv(path):
    """Read a dataset CSV back into records.

    Returns ``(header, records)`` where ``header`` holds the decoded comment
    lines. Raises :class:`DatasetParseError` with the offending line number.
    """
    from .experiments import SimulationRecord

    header = {}
    records = []
    columns = None
    with open(path, newline="") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip():
                continue
            if line.startswith("#"):
                key, _, value = line[1:].partition(":")
                try:
                    header[key.strip()] = json.loads(value)
                except json.JSONDecodeError:
                    header[key.strip()] = value.strip()
                continue
            row = next(csv.reader([line]))
            if columns is None:
                if tuple(row) != DATASET_COLUMNS:
                    raise DatasetParseError(f"unexpected header {row}", lineno)
                columns = row
                continue
            if len(row) != len(columns):
                raise DatasetParseError(f"expected {len(columns)} fields, got {len(row)}", lineno)
            v = dict(zip(columns, row))
            nums = {c: _parse_float(v[c], lineno, c) for c in columns[2:14]}
            try:
                index = int(v["index"])
                failed = bool(int(v["failed"]))
            except ValueError:
                raise DatasetParseError("index/failed must be integers", lineno) from None
            params = np.array([nums[p] for p in ("p1", "p2", "p3", "p4")])
            params = params[~np.isnan(params)]
            fs = None if failed else FormantSet(nums["f1"], nums["f2"])
            cond = v["condition"]
            label = ""
            if cond.startswith("vowel:"):
                cond, label = "vowel_sweep", cond[len("vowel:"):]
            elif cond not in ("C1", "C2", "ring_sweep"):
                raise DatasetParseError(f"unknown condition {cond!r}", lineno)
            records.append(SimulationRecord(
                cond, index, params, nums["rho"], nums["theta"],
                DctPair(nums["a1t"], nums["a2t"]), fs,
                DeviationPair(nums["df1"], nums["df2"]), failed, label))
    if columns is None:
        raise DatasetParseError("no header row found (empty file?)", None)
    return header, records


def load_config(path):
    """Read a JSON config document.

    Recognized sections: ``generic`` (GenericConfig fields), ``drm``
    (``n``, ``length_cm``), ``fant`` (FantGeometry fields), ``acoustics``
    (AcousticConstants fields) and ``grid`` (``start``, ``stop``, ``step``).
    FantGeometry field names are also accepted at the top level.
    """
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidConfigError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise InvalidConfigError(f"{path}: top level must be an object")
    return data


_SECTIONS = ("generic", "drm", "fant", "acoustics", "grid", "experiment")


def model_options(config, model):
    """Keyword arguments for :func:`tractlab.models.get_model` from a config dict."""
    config = dict(config or {})
    fant = dict(config.pop("fant", {}) or {})
    for key in list(config):
        if key in FantGeometry.__dataclass_fields__:
            fant[key] = config.pop(key)
    unknown = set(config) - set(_SECTIONS)
    if unknown:
        raise InvalidConfigError(f"unknown config keys: {sorted(unknown)}")
    opts = {}
    try:
        if "generic" in config:
            opts["generic"] = GenericConfig(**config["generic"])
        if "drm" in config:
            drm = config["drm"]
            opts["drm_n"] = int(drm.get("n", 120))
            opts["drm_length_cm"] = float(drm.get("length_cm", 17.5))
            if opts["drm_n"] % 6:
                raise InvalidConfigError("drm.n must be divisible by 6")
        if fant:
            opts["fant"] = FantGeometry.from_dict(fant)
        acoustics = config.get("acoustics")
        if acoustics:
            base = {"loss_model": "simple_lossy" if model == "fant" else "lossless"}
            base.update(acoustics)
            opts["constants"] = AcousticConstants(**base)
    except TypeError as exc:
        raise InvalidConfigError(str(exc)) from None
    return opts
