"""End-to-end extraction: dedup -> switch -> (alpha, beta, *) -> (alpha, beta, gamma).

Also hosts the experiment harness that sweeps generator families and writes
one CSV record per (size, seed) cell.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .bitmatrix import BinaryMatrix, dedup_columns
from .errors import BudgetExceededError, PreconditionError, StageError
from .generators import FAMILIES, GeneratorSpec, declared_vc_bound, generate, parse_generator_spec
from .homogenize import HomogenizeConfig, extract_ab_star, extract_abc
from .patterns import ExtractionCertificate, TriPattern, verify_certificate
from .switch import SwitchWitness, extract_switch, guaranteed_switch_size, switch_submatrix
from .vcdim import matrix_vc_dimension

__all__ = [
    "CSV_HEADER",
    "DEFAULT_PIPELINE_VC_BUDGET",
    "PipelineReport",
    "extract_structure",
    "vc_dimension_or_bound",
    "run_experiment",
    "write_csv",
    "experiment_csv",
]

CSV_HEADER = (
    "family", "n_cols", "m_rows", "distinct_cols", "vc_dim", "vc_dim_exact",
    "switch_size", "ab_star_size", "final_size", "kind", "total_ms", "error",
)

# visited-node budget for the exact VC-dimension shown in reports
DEFAULT_PIPELINE_VC_BUDGET = 20_000


@dataclass
class PipelineReport:
    m_rows: int
    n_cols: int
    distinct_cols: int
    vc_dim: int
    vc_dim_exact: bool
    switch_size: int
    ab_star_size: int
    certificate: ExtractionCertificate
    vacuous: bool
    fallback: bool
    guaranteed_switch_size: int
    switch: SwitchWitness
    kept_columns: tuple[int, ...]
    timings_ms: dict[str, float] = field(default_factory=dict)

    @property
    def final_size(self) -> int:
        return self.certificate.size

    def summary(self, timings: bool = False) -> dict[str, object]:
        """Flat key/value view used by the CLI."""
        cert = self.certificate
        out = {
            "m_rows": self.m_rows,
            "n_cols": self.n_cols,
            "distinct_cols": self.distinct_cols,
            "vc_dim": self.vc_dim,
            "vc_dim_exact": int(self.vc_dim_exact),
            "switch_size": self.switch_size,
            "guaranteed_switch_size": self.guaranteed_switch_size,
            "ab_star_size": self.ab_star_size,
            "final_size": self.final_size,
            "pattern": " ".join(str(x) for x in cert.pattern),
            "kind": str(cert.kind),
            "vacuous": int(self.vacuous),
            "fallback": int(self.fallback),
            "rows": " ".join(map(str, cert.rows)),
            "cols": " ".join(map(str, cert.cols)),
        }
        if timings:
            out.update({f"ms_{k}": f"{v:.3f}" for k, v in self.timings_ms.items()})
        return out


def _log_bound(A: BinaryMatrix) -> int:
    # a shattered k-set needs 2^k distinct members
    members = max(len(set(A.rows)), len(set(A.columns)), 1)
    return members.bit_length() - 1


def vc_dimension_or_bound(
    A: BinaryMatrix, budget: Optional[int] = DEFAULT_PIPELINE_VC_BUDGET, declared: Optional[int] = None
) -> tuple[int, bool]:
    """Exact matrix VC-dimension if the search fits ``budget``, else an upper bound.

    Returns ``(value, exact)``. The fallback is ``declared`` when given,
    otherwise ``floor(log2(#distinct members))``.
    """
    if budget is None or budget > 0:
        try:
            return matrix_vc_dimension(A, budget), True
        except BudgetExceededError:
            pass
    bound = _log_bound(A)
    if declared is not None:
        bound = min(bound, declared)
    return bound, False


def _vacuous_certificate(A: BinaryMatrix, col: int) -> ExtractionCertificate:
    beta = A.entry(0, col)
    return ExtractionCertificate((0,), (col,), TriPattern(1 - beta, beta, 1 - beta))


def _pair_witness(A: BinaryMatrix) -> Optional[ExtractionCertificate]:
    """First ``2 x 2`` witness with ``alpha != beta`` in row-major search order.

    Looks for rows ``r1, r2`` and columns ``c1, c2`` with
    ``A[r1, c1] = A[r2, c2] = beta`` and ``A[r1, c2] = 1 - beta``; one exists
    whenever ``A`` has two distinct rows and two distinct columns.
    """
    full = (1 << A.n) - 1
    rows = A.rows
    for r1, row in enumerate(rows):
        for beta in (0, 1):
            same = row if beta else full & ~row
            other = full & ~same
            if not same or not other:
                continue
            c1 = (same & -same).bit_length() - 1
            for r2, row2 in enumerate(rows):
                hits = other & (row2 if beta else ~row2)
                if r2 == r1 or not hits:
                    continue
                c2 = (hits & -hits).bit_length() - 1
                gamma = (row2 >> c1) & 1
                return ExtractionCertificate((r1, r2), (c1, c2), TriPattern(1 - beta, beta, gamma))
    return None


def extract_structure(
    A: BinaryMatrix,
    cfg: HomogenizeConfig = HomogenizeConfig(),
    *,
    vc_budget: Optional[int] = DEFAULT_PIPELINE_VC_BUDGET,
    declared_vc: Optional[int] = None,
) -> PipelineReport:
    """Find a square tri-pattern submatrix with ``alpha != beta`` in ``A``.

    The certificate indexes the original ``A``. When the staged result has
    size 1 (the switch has size at most 1), a direct search for a ``2 x 2``
    witness runs and ``fallback`` is set if it succeeds. Otherwise the size-1
    result is returned with ``vacuous=True`` instead of raising; this only
    happens when ``A`` has a single distinct row or column.
    """
    if A.m == 0 or A.n == 0:
        raise PreconditionError(f"cannot extract from an empty {A.m}x{A.n} matrix")
    clock = time.perf_counter
    timings = {}
    start = t = clock()

    D, kept = dedup_columns(A)
    timings["dedup"] = (clock() - t) * 1e3

    t = clock()
    witness = extract_switch(D)
    timings["switch"] = (clock() - t) * 1e3

    ab_star_size = 0
    if witness.size == 0:
        cert = _vacuous_certificate(A, kept[0])
    else:
        t = clock()
        switch_cols = witness.columns
        S = switch_submatrix(D, witness)
        sel1, partial = extract_ab_star(S, cfg)
        ab_star_size = len(sel1.rows)
        timings["ab_star"] = (clock() - t) * 1e3

        t = clock()
        B = S.submatrix(sel1.rows, sel1.cols)
        sel2, pattern = extract_abc(B, partial, cfg)
        timings["abc"] = (clock() - t) * 1e3

        rows = [witness.rows[sel1.rows[x]] for x in sel2.rows]
        cols = [kept[switch_cols[sel1.cols[x]]] for x in sel2.cols]
        cert = ExtractionCertificate(rows, cols, pattern)

    fallback = False
    if cert.size < 2:
        # the greedy stages can stall on very small inputs; try a direct size-2 search
        t = clock()
        pair = _pair_witness(A)
        timings["fallback"] = (clock() - t) * 1e3
        if pair is not None:
            cert, fallback = pair, True

    vacuous = cert.size < 2
    if not vacuous:
        t = clock()
        check = verify_certificate(A, cert)
        timings["verify"] = (clock() - t) * 1e3
        if not check:
            raise StageError("verify", str(check))

    t = clock()
    vc, exact = vc_dimension_or_bound(A, vc_budget, declared_vc)
    timings["vcdim"] = (clock() - t) * 1e3
    timings["total"] = (clock() - start) * 1e3

    return PipelineReport(
        m_rows=A.m,
        n_cols=A.n,
        distinct_cols=D.n,
        vc_dim=vc,
        vc_dim_exact=exact,
        switch_size=witness.size,
        ab_star_size=ab_star_size,
        certificate=cert,
        vacuous=vacuous,
        fallback=fallback,
        guaranteed_switch_size=guaranteed_switch_size(D.n, max(vc, 1)),
        switch=witness,
        kept_columns=tuple(kept),
        timings_ms=timings,
    )


def _cell(args) -> dict[str, object]:
    spec, cfg, timings, vc_budget = args
    record = {key: "" for key in CSV_HEADER}
    record["family"] = spec.family
    try:
        A = generate(spec)
        t = time.perf_counter()
        report = extract_structure(A, cfg, vc_budget=vc_budget, declared_vc=declared_vc_bound(spec))
        elapsed = (time.perf_counter() - t) * 1e3
    except Exception as exc:  # a failing cell must not abort the sweep
        record["error"] = f"{type(exc).__name__}: {exc}".replace("\n", " ")
        return record
    record.update(
        n_cols=A.n,
        m_rows=A.m,
        distinct_cols=report.distinct_cols,
        vc_dim=report.vc_dim,
        vc_dim_exact=int(report.vc_dim_exact),
        switch_size=report.switch_size,
        ab_star_size=report.ab_star_size,
        final_size=report.final_size,
        kind=str(report.certificate.kind),
        total_ms=f"{elapsed:.3f}" if timings else "",
    )
    return record


def run_experiment(
    family: GeneratorSpec | str,
    sizes: Sequence[int],
    seeds: Sequence[int],
    cfg: HomogenizeConfig = HomogenizeConfig(),
    *,
    timings: bool = False,
    jobs: int = 1,
    vc_budget: Optional[int] = DEFAULT_PIPELINE_VC_BUDGET,
) -> Iterator[dict[str, object]]:
    """One record per (size, seed), size-major, seed-minor.

    ``family`` is a generator spec whose unset size parameters are filled
    with each size; ``seed`` is overridden per cell for families that take
    one. ``total_ms`` stays empty unless ``timings`` is set, so default
    output is byte-reproducible.
    """
    if not sizes:
        raise ValueError("sizes must be non-empty")
    if not seeds:
        raise ValueError("seeds must be non-empty")
    if isinstance(family, str):
        family = parse_generator_spec(family)
    cells = []
    for n in sizes:
        for seed in seeds:
            spec = family.with_size(n)
            if "seed" in FAMILIES[spec.family][1]:
                spec = spec.with_params(seed=seed)
            cells.append((spec, cfg, timings, vc_budget))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(_cell, cells)
    else:
        yield from map(_cell, cells)


def write_csv(records: Iterable[dict[str, object]], fh) -> int:
    writer = csv.DictWriter(fh, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    count = 0
    for record in records:
        writer.writerow(record)
        count += 1
    return count


def experiment_csv(*args, **kwargs) -> str:
    buf = io.StringIO()
    write_csv(run_experiment(*args, **kwargs), buf)
    return buf.getvalue()
