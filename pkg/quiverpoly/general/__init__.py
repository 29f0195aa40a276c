"""Exceptions, class registry, and JSON document input and output shared by quiverpoly modules."""

from .exc import \
    QuiverPolyError, NotDynkin, LabellingError, DimensionMismatch, DocumentError, \
    MixedVertexSchurBasis, ConstructionFailed, SchurFormMissing, WindowUnsound, \
    SearchSpaceTooLarge, TermLimitExceeded, VerificationMismatch
from .registry import Registry
from .document_reader import DocumentReader
from .document_writer import DocumentWriter

__all__ = [
    'QuiverPolyError', 'NotDynkin', 'LabellingError', 'DimensionMismatch', 'DocumentError',
    'MixedVertexSchurBasis', 'ConstructionFailed', 'SchurFormMissing', 'WindowUnsound',
    'SearchSpaceTooLarge', 'TermLimitExceeded', 'VerificationMismatch',
    'Registry', 'DocumentReader', 'DocumentWriter']
