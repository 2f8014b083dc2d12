"""JSON wire formats: fans, fan databases (JSON lines), cycle classes and reports."""

import hashlib
import json
from importlib import resources

from . import __version__
from .errors import MalformedInput
from .fano import ASSUMPTIONS, fraction_str
from .lattice import validate_fan


def fan_from_dict(obj):
    if not isinstance(obj, dict) or "rays" not in obj or "max_cones" not in obj:
        raise MalformedInput("fan object needs 'rays' and 'max_cones'")
    fan = validate_fan(obj["rays"], obj["max_cones"], name=obj.get("name"))
    if "dim" in obj and obj["dim"] != fan.dim:
        raise MalformedInput(f"declared dim {obj['dim']} but rays have length {fan.dim}")
    return fan


def fan_to_dict(fan):
    return fan.to_dict()


def parse_fan(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(exc.msg, exc.lineno) from None
    return fan_from_dict(obj)


def dumps(obj):
    """Byte-stable JSON used for every output of the package."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def parse_database(text):
    """Raw fan dicts from JSON lines; blank lines and '#' comments are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedInput(exc.msg, lineno) from None
        if not isinstance(obj, dict):
            raise MalformedInput("expected a fan object", lineno)
        out.append(obj)
    return out


def database_to_jsonl(fans):
    return "".join(json.dumps(f.to_dict(), sort_keys=True) + "\n" for f in fans)


def load_bundled(name="fano3.jsonl"):
    """Validated fans from a database shipped in ``toric2fano/data``."""
    text = resources.files("toric2fano").joinpath("data", name).read_text()
    return [fan_from_dict(obj) for obj in parse_database(text)]


def cycle_class_to_dict(cls):
    return {"degree": cls.degree,
            "coeffs": {",".join(map(str, k)): v for k, v in sorted(cls.coeffs.items())}}


def cycle_class_from_dict(obj):
    from .chow import CycleClass
    coeffs = {}
    for key, v in obj["coeffs"].items():
        k = tuple(sorted(int(x) for x in key.split(","))) if key else ()
        coeffs[k] = int(v)
    return CycleClass(int(obj["degree"]), coeffs)


def scan_report(result, input_bytes, fast=False):
    """ScanReport document: provenance, per-fan records, aggregate counts, assumptions."""
    counts = dict(result.counts)
    return {
        "tool": "toric2fano",
        "version": __version__,
        "input_sha256": hashlib.sha256(input_bytes).hexdigest(),
        "fast": fast,
        "records": result.records,
        "aggregate": counts,
        "assumptions": list(ASSUMPTIONS),
    }


__all__ = ["fan_from_dict", "fan_to_dict", "parse_fan", "parse_database", "dumps",
           "database_to_jsonl", "load_bundled", "cycle_class_to_dict",
           "cycle_class_from_dict", "scan_report", "fraction_str"]
