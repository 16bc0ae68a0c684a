"""Strand calculus, certified constants and geodesic self-intersection
surveys for cusped hyperbolic surfaces."""

__version__ = "0.1.0"

from .errors import GeoforgeError
from .moebius import Axis, GroupElement, axes_cross, axis_of, classify, \
    hyperbolic_distance, translation_length
from .numerics import PrecisionContext, context
from .strands import CuspNeighborhood, Strand, depth_threshold, \
    level_comparison_gap, multi_strand_bound, strand_length_bounds, \
    strand_self_intersections, winding_number
from .constants import adams_bound, basmajian_bound, bers_bound, \
    collar_width, direct_K, find_D, find_K, orthogonal_distance_bound, \
    thick_part_threshold, thin_boundary_horocycle
from .surfaces import ConstantsReport, SurfaceDescription, \
    build_constants_report, surface_y
from .words import CyclicWord, WordClassification, canonicalize, \
    classify_word, enumerate_words, evaluate
from .intersect import IntersectionConfig, IntersectionResult, \
    crossing_oracle, double_coset_key, self_intersection
from .pants import ExampleSurfaceReport, PantsWithCusps, \
    back_geodesic_length, build_example_surface, horocycle_self_distance
from .survey import SurveyRow, SurveySummary, run_survey
