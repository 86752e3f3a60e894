"""Common index divisors of number fields and their supplementary period fields."""

from .criteria import AnalysisReport, analyze, gbar_table, is_cid_counts, is_cid_form, witness_search
from .errors import IndexDivError, InternalInconsistency
from .fieldfile import FieldFile, load_bundled, load_field_file
from .hnf_ideals import frobenius_ideal, lambda_profile, ramification_probe
from .number_field import Order, element_index, index_form, order_from_power_basis
from .periods import PeriodFieldSpec, cubic_survey, period_order
from .supplementary import supplementary_report

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "FieldFile",
    "IndexDivError",
    "InternalInconsistency",
    "Order",
    "PeriodFieldSpec",
    "analyze",
    "cubic_survey",
    "element_index",
    "frobenius_ideal",
    "gbar_table",
    "index_form",
    "is_cid_counts",
    "is_cid_form",
    "lambda_profile",
    "load_bundled",
    "load_field_file",
    "order_from_power_basis",
    "period_order",
    "ramification_probe",
    "supplementary_report",
    "witness_search",
]
