"""
Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

from cyclohodge._version import __version__
from cyclohodge.criteria import *
from cyclohodge.exceptions import (
    BadPair,
    DomainTooLarge,
    HodgeInvariantError,
    InvalidParams,
    NotPrimePower,
    ParameterError,
    PreconditionViolated,
    QBoundError,
    ReportError,
)
from cyclohodge.galoisorbits import *
from cyclohodge.hodgecli import main, run_cli
from cyclohodge.hodgedata import *
from cyclohodge.hodgehelpers import *
from cyclohodge.hodgereport import VerificationReport, emit_csv, emit_json, write_csv
from cyclohodge.hodgescanner import HodgeScanner, error_row, scan
from cyclohodge.hodgetypes_core import *
from cyclohodge.lemmaengine import *
from cyclohodge.unitgroup import *

version = __version__  # pylint: disable=invalid-name
