"""Exact intersection theory on smooth complete toric varieties and toric 2-Fano tests."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .lattice import Fan, StarFan, faces, star_fan, star_subdivision, validate_fan, walls
from .chow import (CycleClass, DivisorCombo, WallRelation, chern_degrees,
                   class_polynomial, curve_class, degree_of_product,
                   intersection_number, n2_rank, restrict_divisor, wall_relation)
from .surfaces import SurfaceKind, ch2_pair, classify_surface, surface_class, surface_class_fast
from .constructions import (BundleSpec, del_pezzo_database, hirzebruch,
                            kleinschmidt_bundle, product, projective_space)
from .fano import (FanoReport, analyze, is_fano, is_two_fano, lemma_filter,
                   rank2_closed_forms, rank2_sweep, scan)
