"""
HodgeScanner class.

Runs a cell function over a parameter grid and returns the per-cell
results, either in-process or fanned out to a process pool. Each cell
function takes one grid cell and returns a list of (cell, result) rows,
so a single cell (e.g. a modulus q) may contribute several report rows
(e.g. one per subgroup class).

Results are always yielded in grid order, whatever the degree of
parallelism, so reports are reproducible.

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from logging import getLogger
from time import perf_counter

from cyclohodge.exceptions import (
    BadPair,
    DomainTooLarge,
    HodgeInvariantError,
    ParameterError,
    PreconditionViolated,
)
from cyclohodge.hodgereport import VerificationReport
from cyclohodge.hodgetypes_core import ERR_LOG, ERR_RAISE

SCAN_ERRORS = (
    BadPair,
    DomainTooLarge,
    HodgeInvariantError,
    ParameterError,
    PreconditionViolated,
)
"""Exceptions handled according to the quitonerror policy"""


def error_row(err: Exception) -> dict:
    """
    Convert a cell error into a failing report row.

    :param Exception err: error raised by the cell function
    :return: result dict with ok=False
    :rtype: dict
    """

    return {"ok": False, "error": str(err), "error_type": type(err).__name__}


def _call(cellfunc, cell) -> tuple:
    """
    Evaluate one cell, capturing scan errors so they survive
    the trip back from a worker process.

    :return: tuple of (rows, error)
    :rtype: tuple
    """

    try:
        return (cellfunc(cell), None)
    except SCAN_ERRORS as err:
        return (None, err)


class HodgeScanner:
    """
    HodgeScanner class.
    """

    def __init__(
        self,
        cells,
        cellfunc,
        jobs: int = 1,
        quitonerror: int = ERR_LOG,
        errorhandler: object = None,
        chunksize: int = 1,
    ):  # pylint: disable=too-many-arguments
        """Constructor.

        :param cells: iterable of grid cells
        :param cellfunc: picklable function cell -> list of (cell, result)
        :param int jobs: number of worker processes, 1 = in-process (1)
        :param int quitonerror: ERR_IGNORE (0) = ignore errors,  ERR_LOG (1) = log continue,
            ERR_RAISE (2) = (re)raise (1)
        :param object errorhandler: error handling object or function (None)
        :param int chunksize: cells per worker task (1)
        :raises: ParameterError (if jobs < 1)
        """

        if jobs < 1:
            raise ParameterError(f"jobs must be >= 1, got {jobs}")
        self._cells = list(cells)
        self._cellfunc = cellfunc
        self._jobs = jobs
        self._quitonerror = quitonerror
        self._errorhandler = errorhandler
        self._chunksize = chunksize
        self._outputs = None
        self._logger = getLogger(__name__)

    def __iter__(self):
        """Iterator."""

        return self

    def __next__(self) -> tuple:
        """
        Return next item in iteration.

        :return: tuple of (cell, rows)
        :rtype: tuple
        :raises: StopIteration
        """

        (cell, rows) = self.read()
        if cell is None and rows is None:
            raise StopIteration
        return (cell, rows)

    def _evaluate(self):
        """
        Generator of (cell, (rows, error)) in grid order.
        """

        func = partial(_call, self._cellfunc)
        if self._jobs == 1 or len(self._cells) < 2:
            for cell in self._cells:
                yield cell, func(cell)
            return
        pool = ProcessPoolExecutor(max_workers=self._jobs)
        try:
            for cell, out in zip(
                self._cells, pool.map(func, self._cells, chunksize=self._chunksize)
            ):
                yield cell, out
        finally:
            # closing the generator early drops any cells not yet started
            pool.shutdown(wait=True, cancel_futures=True)

    def read(self) -> tuple:
        """
        Evaluate the next grid cell.

        'quitonerror' determines whether to raise, log or ignore cell errors.
        Unless raised, a cell in error is returned as a single failing row
        carrying the error text, so it is counted in the report summary.

        :return: tuple of (cell, rows), or (None, None) when the grid is exhausted
        :rtype: tuple
        """

        if self._outputs is None:
            self._outputs = self._evaluate()
        for cell, (rows, err) in self._outputs:
            if err is None:
                self._logger.info("Cell %s done, %d row(s)", cell, len(rows))
                return (cell, rows)
            if self._quitonerror:
                self._do_error(cell, err)
            return (cell, [(cell, error_row(err))])
        return (None, None)

    def _do_error(self, cell, err: Exception):
        """
        Handle error.

        :param cell: grid cell in error
        :param Exception err: error
        :raises: Exception if quitonerror = 2
        """

        if self._quitonerror == ERR_RAISE:
            # stop the pool before propagating
            if self._outputs is not None:
                self._outputs.close()
            raise err
        if self._quitonerror == ERR_LOG:
            # pass to error handler if there is one
            if self._errorhandler is None:
                self._logger.error("Cell %s: %s", cell, err)
            else:
                self._errorhandler(err)

    def run(self, report: VerificationReport) -> VerificationReport:
        """
        Scan every cell into a report and record the wall time.

        :param VerificationReport report: report to populate
        :return: the populated report
        :rtype: VerificationReport
        """

        start = perf_counter()
        for _, rows in self:
            for cell, result in rows:
                report.add(cell, result)
        report.wall_time = round(perf_counter() - start, 3)
        return report

    @property
    def cells(self) -> list:
        """
        Getter for grid cells.

        :return: list of cells
        :rtype: list
        """

        return self._cells


def scan(
    command: str,
    cells,
    cellfunc,
    invocation: dict = None,
    jobs: int = 1,
    **kwargs,
) -> VerificationReport:
    """
    Convenience wrapper: scan a grid into a new report.

    :param str command: report command name
    :param cells: iterable of grid cells
    :param cellfunc: picklable function cell -> list of (cell, result)
    :param dict invocation: echoed parameters (None)
    :param int jobs: number of worker processes (1)
    :param kwargs: further HodgeScanner keyword arguments
    :return: populated report
    :rtype: VerificationReport
    """

    report = VerificationReport(command, invocation)
    return HodgeScanner(cells, cellfunc, jobs=jobs, **kwargs).run(report)
