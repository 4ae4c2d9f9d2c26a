"""
VerificationReport class.

Machine-readable summary of a verification scan. The canonical body
(everything except the optional wall-time field) is deterministic for
identical inputs and versions:

+----------------+----------------------------------------------+
| field          | content                                      |
+================+==============================================+
| tool_version   | cyclohodge version string                    |
| command        | subcommand / scan name                       |
| invocation     | echoed parameters                            |
| grid           | list of cells, e.g. [n, q] or [q, a]         |
| results        | one dict per cell, always with an "ok" flag  |
| summary        | counts derived from results                  |
| overall_status | "pass" or "fail"                             |
| wall_time      | seconds (optional, excluded from canonical)  |
+----------------+----------------------------------------------+

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

import csv
import json
from collections import Counter
from logging import getLogger

from cyclohodge._version import __version__
from cyclohodge.exceptions import ReportError
from cyclohodge.hodgetypes_core import CSV_HEADERS, STATUS_FAIL, STATUS_PASS


def _plain(val):
    """
    Convert tuples (and nested containers) to JSON-native types so that
    parse(serialize(report)) == report.
    """

    if isinstance(val, dict):
        return {str(k): _plain(v) for k, v in val.items()}
    if isinstance(val, (list, tuple)):
        return [_plain(v) for v in val]
    return val


class VerificationReport:
    """
    VerificationReport class.
    """

    def __init__(
        self,
        command: str,
        invocation: dict = None,
        tool_version: str = __version__,
    ):
        """Constructor.

        :param str command: subcommand or scan name e.g. "verify-lemma"
        :param dict invocation: echoed parameters (None)
        :param str tool_version: tool version (current version)
        """

        self._command = command
        self._invocation = _plain(invocation or {})
        self._tool_version = tool_version
        self._grid = []
        self._results = []
        self._info = Counter()
        self.wall_time = None
        self._logger = getLogger(__name__)

    def add(self, cell, result: dict):
        """
        Add a cell and its result.

        :param cell: grid cell e.g. (n, q)
        :param dict result: per-cell result, must contain an "ok" flag
        :raises: ReportError if result has no "ok" flag
        """

        if "ok" not in result:
            raise ReportError(f"Result for cell {cell} has no 'ok' flag")
        self._grid.append(_plain(cell))
        self._results.append(_plain(result))
        if not result["ok"]:
            self._logger.warning("Violation at cell %s: %s", cell, result)

    def note(self, key: str, count: int = 1):
        """
        Increment an informational counter (never affects pass/fail).

        :param str key: counter name
        :param int count: increment (1)
        """

        self._info[key] += count

    def merge(self, other: "VerificationReport"):
        """
        Append another report's cells and counters to this one.

        :param VerificationReport other: report to merge
        """

        for cell, result in zip(other.grid, other.results):
            self.add(cell, result)
        self._info.update(other.informational)

    def sort(self):
        """
        Put cells into canonical (ascending grid) order.
        """

        # scalar cells (e.g. a bare modulus) sort alongside list cells
        pairs = sorted(
            zip(self._grid, self._results),
            key=lambda cr: cr[0] if isinstance(cr[0], list) else [cr[0]],
        )
        self._grid = [c for c, _ in pairs]
        self._results = [r for _, r in pairs]

    def inject_violation(self):
        """
        Test-only fault injection: mark the first result as a
        violation (or add a synthetic violating cell if the report is empty).
        """

        if self._results:
            self._results[0]["ok"] = False
            self._results[0]["injected"] = True
        else:
            self.add(["injected"], {"ok": False, "injected": True})

    @property
    def command(self) -> str:
        """
        Getter for command.

        :return: command name
        :rtype: str
        """

        return self._command

    @property
    def grid(self) -> list:
        """
        Getter for grid cells.

        :return: list of cells
        :rtype: list
        """

        return self._grid

    @property
    def results(self) -> list:
        """
        Getter for per-cell results.

        :return: list of result dicts
        :rtype: list
        """

        return self._results

    @property
    def informational(self) -> dict:
        """
        Getter for informational counters.

        :return: dict of counters
        :rtype: dict
        """

        return dict(self._info)

    @property
    def violations(self) -> list:
        """
        Getter for violating cells.

        :return: list of (cell, result)
        :rtype: list
        """

        return [(c, r) for c, r in zip(self._grid, self._results) if not r["ok"]]

    @property
    def summary(self) -> dict:
        """
        Summary counts, always derived from the results.

        Step tags are weighted by the "units" field where present.

        :return: summary dict
        :rtype: dict
        """

        failed = sum(1 for r in self._results if not r["ok"])
        summ = {
            "cells": len(self._results),
            "passed": len(self._results) - failed,
            "failed": failed,
        }
        tags = Counter()
        for res in self._results:
            if res.get("step_tag") is not None:
                tags[res["step_tag"]] += res.get("units", 1)
        if tags:
            summ["step_tags"] = dict(sorted(tags.items()))
        if self._info:
            summ["informational"] = dict(sorted(self._info.items()))
        return summ

    @property
    def overall_status(self) -> str:
        """
        Getter for overall status.

        :return: "pass" if no violations, else "fail"
        :rtype: str
        """

        return STATUS_FAIL if self.violations else STATUS_PASS

    def to_dict(self, timing: bool = True) -> dict:
        """
        Report as a dict of JSON-native values.

        :param bool timing: include wall_time if set (True)
        :return: report dict
        :rtype: dict
        """

        body = {
            "tool_version": self._tool_version,
            "command": self._command,
            "invocation": self._invocation,
            "grid": self._grid,
            "results": self._results,
            "summary": self.summary,
            "overall_status": self.overall_status,
        }
        if timing and self.wall_time is not None:
            body["wall_time"] = self.wall_time
        return body

    def serialize(self, timing: bool = True) -> str:
        """
        Serialize report as canonical JSON (sorted keys, 2-space indent).

        :param bool timing: include wall_time if set (True)
        :return: JSON text terminated by newline
        :rtype: str
        """

        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"

    @staticmethod
    def parse(text: str) -> "VerificationReport":
        """
        Parse JSON text to VerificationReport object.

        :param str text: serialized report
        :return: VerificationReport
        :rtype: VerificationReport
        :raises: ReportError if text is not a valid report
        """

        try:
            body = json.loads(text)
            report = VerificationReport(
                body["command"],
                body.get("invocation", {}),
                body["tool_version"],
            )
            for cell, result in zip(body["grid"], body["results"]):
                report.add(cell, result)
            for key, val in body["summary"].get("informational", {}).items():
                report.note(key, val)
            report.wall_time = body.get("wall_time", None)
        except (ValueError, KeyError, TypeError, AttributeError) as err:
            raise ReportError(f"Invalid report: {err}") from err
        return report

    def __eq__(self, other) -> bool:
        return isinstance(other, VerificationReport) and self.to_dict(
            False
        ) == other.to_dict(False)

    def __str__(self) -> str:
        """
        Human readable representation.

        :return: human readable representation
        :rtype: str
        """

        summ = self.summary
        return (
            f"<VerificationReport({self._command}, cells={summ['cells']}, "
            f"failed={summ['failed']}, status={self.overall_status})>"
        )

    def __repr__(self) -> str:
        """
        Machine readable representation.

        :return: machine readable representation
        :rtype: str
        """

        return f"VerificationReport(command={self._command!r}, invocation={self._invocation!r})"


def _csvval(val) -> str:
    """
    Format a result value for CSV: booleans as 1/0, None as empty.
    """

    if val is None:
        return ""
    if isinstance(val, bool):
        return "1" if val else "0"
    if isinstance(val, list):
        return ";".join(str(v) for v in val)
    return str(val)


def write_csv(report: VerificationReport, stream):
    """
    Write report as CSV to an open text stream, one row per cell in
    grid order, with the documented header for the report's command.

    :param VerificationReport report: finalised report
    :param stream: writable text stream
    :raises: ReportError if the command has no CSV layout
    """

    header = CSV_HEADERS.get(report.command, None)
    if header is None:
        raise ReportError(f"No CSV layout defined for {report.command}")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for result in report.results:
        writer.writerow([_csvval(result.get(col, None)) for col in header])


def emit_csv(report: VerificationReport, path: str):
    """
    Write report as CSV file.

    :param VerificationReport report: finalised report
    :param str path: output file path
    :raises: ReportError on I/O error (with path context)
    """

    try:
        with open(path, "w", encoding="utf-8", newline="") as stream:
            write_csv(report, stream)
    except OSError as err:
        raise ReportError(f"Unable to write CSV report to {path}: {err}") from err


def emit_json(report: VerificationReport, path: str, timing: bool = True):
    """
    Write report as JSON file.

    :param VerificationReport report: finalised report
    :param str path: output file path
    :param bool timing: include wall_time (True)
    :raises: ReportError on I/O error (with path context)
    """

    try:
        with open(path, "w", encoding="utf-8") as stream:
            stream.write(report.serialize(timing))
    except OSError as err:
        raise ReportError(f"Unable to write JSON report to {path}: {err}") from err
