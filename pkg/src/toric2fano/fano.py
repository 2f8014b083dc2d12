"""Fano and 2-Fano tests, the degree filter, database scans and the Picard-rank-2 theory.

Conventions:

* -K_X is ample iff (-K_X . C) > 0 for every torus-invariant curve C.
* ch_2(X) is nef iff it pairs non-negatively with every torus-invariant
  surface.  This is the criterion reported by every :class:`FanoReport`.
* Pairings are exact :class:`~fractions.Fraction` values, never floats.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .chow import chern_degrees, class_polynomial, wall_relation, walls
from .constructions import BundleSpec, kleinschmidt_bundle
from .errors import FanValidationError
from .lattice import Fan, validate_fan
from .surfaces import OTHER, ch2_pair, surface_class, surface_class_fast

log = logging.getLogger(__name__)

ASSUMPTIONS = (
    "ch2 nefness is tested against torus-invariant surfaces only",
    "projectivity is not checked; fans are verified smooth and complete",
    "surfaces whose star fan has 5 or more rays use the general reduction",
)


@dataclass
class FanoReport:
    name: object
    dim: int
    picard: int
    c1_top: int
    euler: int
    is_fano: bool
    fano_witness: object = None
    lemma_value: object = None
    lemma_pass: bool = True
    is_two_fano: bool = False
    two_fano_witness: object = None
    pairings: dict = field(default_factory=dict)
    surface_kinds: dict = field(default_factory=dict)
    skipped: object = None

    def to_dict(self):
        def cone(c):
            return None if c is None else list(c)
        return {
            "name": self.name,
            "dim": self.dim,
            "picard": self.picard,
            "c1_top": self.c1_top,
            "euler": self.euler,
            "is_fano": self.is_fano,
            "fano_witness": None if self.fano_witness is None else
            {"wall": cone(self.fano_witness[0]), "degree": self.fano_witness[1]},
            "lemma_value": self.lemma_value,
            "lemma_pass": self.lemma_pass,
            "is_two_fano": self.is_two_fano,
            "two_fano_witness": None if self.two_fano_witness is None else
            {"cone": cone(self.two_fano_witness[0]),
             "ch2_pair": fraction_str(self.two_fano_witness[1])},
            "pairings": [{"cone": list(c), "ch2_pair": fraction_str(v)}
                         for c, v in sorted(self.pairings.items())],
            "surface_kinds": dict(sorted(self.surface_kinds.items())),
            "skipped": self.skipped,
        }


def fraction_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def is_fano(fan):
    """(True, None) if -K is ample, else (False, (wall, degree)) for the first bad wall."""
    for wall, _ in walls(fan):
        deg = wall_relation(fan, wall).degree()
        if deg <= 0:
            return False, (wall, deg)
    return True, None


def lemma_filter(fan):
    """Necessary condition c_1^(d-2) (c_1^2 - 2 c_2) >= 0 for 2-Fano; returns (passes, value)."""
    if fan.dim < 2:
        raise ValueError("the degree filter needs d >= 2")
    value = chern_degrees(fan).lemma_value
    return value >= 0, value


def surface_pairings(fan):
    """ch_2 pairing of every (d-2)-cone, plus a count of recognised surface kinds."""
    pairings, kinds = {}, {}
    for tau in sorted(c for c in fan.cones if len(c) == fan.dim - 2):
        kind, cls = surface_class(fan, tau)
        pairings[tau] = ch2_pair(cls)
        kinds[kind.kind] = kinds.get(kind.kind, 0) + 1
    return pairings, kinds


def analyze(fan, fast=False, name=None):
    """Full :class:`FanoReport`; ``fast`` skips the surface sweep once a cheap test fails."""
    ch = chern_degrees(fan)
    fano, witness = is_fano(fan)
    report = FanoReport(name=name if name is not None else fan.name, dim=fan.dim,
                        picard=fan.picard, c1_top=ch.c1_top, euler=ch.euler,
                        is_fano=fano, fano_witness=witness)
    if fan.dim >= 2:
        report.lemma_value = ch.lemma_value
        report.lemma_pass = ch.lemma_value >= 0
    if fast and not fano:
        report.skipped = "not Fano"
        return report
    if fast and not report.lemma_pass:
        report.skipped = "degree filter"
        return report
    if fan.dim >= 2:
        report.pairings, report.surface_kinds = surface_pairings(fan)
    bad = [(c, v) for c, v in sorted(report.pairings.items()) if v < 0]
    report.two_fano_witness = bad[0] if bad else None
    report.is_two_fano = fano and not bad
    if report.is_two_fano and not report.lemma_pass:
        raise ArithmeticError(f"{fan!r}: 2-Fano but fails the degree filter")
    return report


def is_two_fano(fan):
    report = analyze(fan)
    return report.is_two_fano, report


# -- database scan -----------------------------------------------------------

@dataclass
class ScanResult:
    records: list
    counts: dict

    @property
    def errors(self):
        return [r for r in self.records if "error" in r]


def _scan_one(args):
    index, entry, fast = args
    try:
        if isinstance(entry, Fan):
            fan, name = entry, entry.name
        else:
            name = entry.get("name")
            fan = validate_fan(entry["rays"], entry["max_cones"], name=name)
            if "dim" in entry and entry["dim"] != fan.dim:
                raise FanValidationError(f"declared dim {entry['dim']} but rays have "
                                         f"length {fan.dim}")
    except (FanValidationError, KeyError, TypeError) as exc:
        return {"index": index, "name": None if isinstance(entry, Fan) else
                entry.get("name") if isinstance(entry, dict) else None,
                "error": type(exc).__name__, "message": str(exc)}
    out = analyze(fan, fast=fast, name=name).to_dict()
    out["index"] = index
    return out


def scan(database, fast=False, jobs=1):
    """Analyse every fan of a database; validation errors are recorded, not raised.

    Entries are :class:`Fan` objects or raw fan dicts.  Output order is input
    order for any ``jobs``.
    """
    tasks = [(k, e, fast) for k, e in enumerate(database)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_scan_one, tasks, chunksize=1))
    else:
        records = [_scan_one(t) for t in tasks]
    counts = {"total": len(records), "invalid": 0, "fano": 0, "lemma_pass": 0,
              "two_fano": 0}
    for r in records:
        if "error" in r:
            counts["invalid"] += 1
            continue
        counts["fano"] += r["is_fano"]
        counts["lemma_pass"] += r["lemma_pass"]
        counts["two_fano"] += r["is_two_fano"]
    return ScanResult(records, counts)


# -- Picard number 2 ---------------------------------------------------------

def rank_two_surface_cones(spec):
    """Cones of the surfaces S_1, S_2, S_3 (only those defined for this m, n).

    S_1 = D_1..D_(m-3) E^(n-1), S_2 = D_1..D_(m-2) E^(n-2),
    S_3 = D_1..D_(m-1) E^(n-3); the E-factors are spread over y_1, y_2, ...
    since all E_j are numerically equal.
    """
    m, n = spec.m, spec.n
    out = {}
    for name, p, q in (("S1", m - 3, n - 1), ("S2", m - 2, n - 2), ("S3", m - 1, n - 3)):
        if p >= 0 and q >= 0:
            out[name] = tuple(spec.x(i) for i in range(1, p + 1)) + \
                tuple(spec.y(j) for j in range(1, q + 1))
    return out


@dataclass
class RankTwoForms:
    spec: BundleSpec
    fano: bool
    ch2_S2: int
    ch2_S2_pairing: Fraction
    two_fano: bool
    basis: dict


def rank2_closed_forms(spec, with_basis=True):
    """Closed-form Fano / 2-Fano answers for a Picard-rank-2 bundle.

    ``ch2_S2`` is m a_(m-1) - 2 sum(a): the diagonal sum of I_{S_2}.  The
    pairing (ch_2 . S_2) is half of it and is returned as ``ch2_S2_pairing``.
    """
    a = spec.twists
    diag = spec.m * a[-1] - 2 * sum(a)
    fano = spec.n > sum(a)
    two_fano = fano and (all(x == 0 for x in a) or spec.m == 2)
    basis = {}
    if with_basis:
        fan = kleinschmidt_bundle(spec)
        basis = {k: surface_class_fast(fan, c)
                 for k, c in rank_two_surface_cones(spec).items()}
    return RankTwoForms(spec, fano, diag, Fraction(diag, 2), two_fano, basis)


def bundle_specs(d, budget):
    """All sorted specs with m + n - 2 = d and sum of twists <= budget, sorted by (m, n, a)."""
    out = []
    for m in range(2, d + 1):
        n = d + 2 - m
        for tw in combinations_with_replacement(range(budget, -1, -1), m - 1):
            if sum(tw) <= budget:
                out.append(BundleSpec(m, n, tw))
    return sorted(out, key=lambda s: (s.m, s.n, s.twists))


def variety_key(spec):
    """Products P^(m-1) x P^(n-1) arise from both (m, n) and (n, m)."""
    if all(a == 0 for a in spec.twists):
        return ("product",) + tuple(sorted((spec.m - 1, spec.n - 1)))
    return ("bundle", spec.m, spec.n, spec.twists)


@dataclass
class SweepResult:
    dim: int
    budget: int
    checked: int
    discrepancies: list
    members: list

    @property
    def two_fano_count(self):
        return len({variety_key(s) for s in self.members})


def rank2_sweep(d, budget):
    """Compare the closed forms with the full surface sweep on every Fano spec."""
    bad, members, checked = [], [], 0
    for spec in bundle_specs(d, budget):
        closed = rank2_closed_forms(spec, with_basis=False)
        if not closed.fano:
            continue
        fan = kleinschmidt_bundle(spec)
        fano, _ = is_fano(fan)
        full = analyze(fan).is_two_fano
        checked += 1
        if fano != closed.fano or full != closed.two_fano:
            log.warning("rank-2 mismatch at %s", spec)
            bad.append({"m": spec.m, "n": spec.n, "twists": list(spec.twists),
                        "closed_form": closed.two_fano, "sweep": full})
        if full:
            members.append(spec)
    return SweepResult(d, budget, checked, bad, members)
