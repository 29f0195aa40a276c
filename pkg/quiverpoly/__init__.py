"""The quiverpoly package."""

import logging

from .configuration import configure

configure()

_LOG = logging.getLogger(__name__)

from .rootsys import DynkinType, PositiveRoot, Quiver, detect_dynkin_type, quiver_roots, \
    euler_form
from .orbits import OrbitLabel, enumerate_orbits, validate_orbit
from .resolution import DirectedPartition, find_directed_partition, resolution_pair
from .evaluator import QuiverPolynomial, compute, verify

__all__ = [
    'DynkinType', 'PositiveRoot', 'Quiver', 'detect_dynkin_type', 'quiver_roots', 'euler_form',
    'OrbitLabel', 'enumerate_orbits', 'validate_orbit',
    'DirectedPartition', 'find_directed_partition', 'resolution_pair',
    'QuiverPolynomial', 'compute', 'verify']
