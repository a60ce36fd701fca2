"""Grid scan of the four-qubit noise plane.

For every (alpha, beta) on a step grid of the simplex the scanner
evaluates the four witnesses on the GHZ/W/white-noise family and tests
positivity under partial transposition for the two inequivalent cuts of
the permutation-symmetric family, one qubit versus three and two versus
two.  Output is a CSV with a fixed header; rows are ordered row-major in
alpha then beta and the file is byte-reproducible for fixed settings.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import optimizer
from .criteria import evaluate_all
from .families import fig3_family
from .qstate import Bipartition, is_ppt

CSV_HEADER = (
    "alpha,beta,lhs_In,lhs_I2,lhs_InM1,lhs_GME,"
    "viol_In,viol_I2,viol_InM1,viol_GME,ppt_1v3,ppt_2v2"
)

_CUT_1V3 = Bipartition(4, frozenset({1}))
_CUT_2V2 = Bipartition(4, frozenset({1, 2}))

_OPT_RESTARTS = 3
_OPT_EVALS = 400


@dataclass(frozen=True)
class ScanPoint:
    alpha: float
    beta: float
    lhs: dict
    violated: dict
    ppt_1v3: bool
    ppt_2v2: bool

    def csv_row(self) -> str:
        cells = [str(self.alpha), str(self.beta)]
        cells += [str(self.lhs[k]) for k in ("In", "I2", "InMinus1", "GME")]
        cells += [str(int(self.violated[k])) for k in ("In", "I2", "InMinus1", "GME")]
        cells += [str(int(self.ppt_1v3)), str(int(self.ppt_2v2))]
        return ",".join(cells)


def grid_points(step: float) -> list:
    """(alpha, beta) lattice of the simplex, row-major in alpha then beta."""
    if not 0.0 < step <= 0.5:
        raise ValueError(f"step must be in (0, 0.5], got {step}")
    top = int(round(1.0 / step))
    points = []
    for i in range(top + 1):
        alpha = i * step
        if alpha > 1.0 + 1e-9:
            break
        for j in range(top + 1 - i):
            beta = j * step
            if alpha + beta > 1.0 + 1e-9:
                break
            points.append((alpha, beta))
    return points


def evaluate_point(
    alpha: float,
    beta: float,
    tolerance: float = 1e-9,
    optimize: bool = False,
    seed=0,
    index: int = 0,
) -> ScanPoint:
    rho = fig3_family(alpha, beta)
    if optimize:
        lhs = {}
        for k, which in enumerate(("In", "I2", "InMinus1", "GME")):
            res = optimizer.maximize_violation(
                rho,
                which,
                restarts=_OPT_RESTARTS,
                max_evals=_OPT_EVALS,
                seed=[int(seed), index, k],
            )
            lhs[which] = res.best_lhs
    else:
        lhs = {r.inequality: r.lhs for r in evaluate_all(rho, tolerance)}
    violated = {k: v > tolerance for k, v in lhs.items()}
    return ScanPoint(
        alpha=alpha,
        beta=beta,
        lhs=lhs,
        violated=violated,
        ppt_1v3=is_ppt(rho, _CUT_1V3, tolerance),
        ppt_2v2=is_ppt(rho, _CUT_2V2, tolerance),
    )


def scan_grid(
    step: float,
    tolerance: float = 1e-9,
    optimize: bool = False,
    seed=0,
    threads: int = 1,
) -> list:
    """Evaluate the whole grid; deterministic ordering regardless of threads."""
    points = grid_points(step)

    def work(item):
        idx, (a, b) = item
        return evaluate_point(a, b, tolerance=tolerance, optimize=optimize, seed=seed, index=idx)

    if threads <= 1:
        return [work(item) for item in enumerate(points)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(work, enumerate(points)))


def write_csv(rows: list, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fh.write(row.csv_row() + "\n")
