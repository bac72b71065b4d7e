"""Parameter sweeps producing one row per admissible (N, q, p)."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import gcd
from typing import Iterable, TextIO

from .invariants import jones_polynomial
from .oracle import Verdict, compare_up_to_mirror, detect_braid_float, oriented_enumerate_braid
from .symbolic import classify, lissajous_braid, normalize_params

COLUMNS = ("N", "q", "p", "d", "braid_len", "jones", "flags", "verify_status")


@dataclass(frozen=True)
class SweepRow:
    N: int
    q: int
    p: int
    d: int
    braid_len: int
    jones: str
    flags: str
    verify_status: str

    def tsv(self) -> str:
        return "\t".join(str(getattr(self, c)) for c in COLUMNS)


def compute_row(N: int, q: int, p: int, check_float: bool = False) -> SweepRow:
    params = normalize_params(N, q, p)
    word = lissajous_braid(N, q, p)
    verdict = compare_up_to_mirror(word, oriented_enumerate_braid(N, q, p))
    status = str(verdict)
    if check_float:
        _, qo, po = params.oriented
        exact = oriented_enumerate_braid(N, q, p)
        status += ";float=" + ("ok" if detect_braid_float(N, qo, po) == exact else "mismatch")
    flags = classify(N, q, p).flags()
    return SweepRow(
        N=N,
        q=q,
        p=p,
        d=params.d,
        braid_len=len(word),
        jones=str(jones_polynomial(word)),
        flags=",".join(flags) if flags else "-",
        verify_status=status,
    )


def _row_args(args: tuple[int, int, int, bool]) -> SweepRow:
    return compute_row(*args)


def admissible(N: int, q: int, p_values: Iterable[int]) -> tuple[list[int], int]:
    keep, skipped = [], 0
    for p in p_values:
        if gcd(N, q) == 1 and gcd(N, p) == 1:
            keep.append(p)
        else:
            skipped += 1
    return keep, skipped


def sweep(
    N: int,
    q: int,
    p_min: int,
    p_max: int,
    parallel: bool = False,
    workers: int | None = None,
    check_float: bool = False,
) -> tuple[list[SweepRow], int]:
    """Rows for every admissible ``p`` in ``[p_min, p_max]`` in increasing order, plus the skip count."""
    ps, skipped = admissible(N, q, range(p_min, p_max + 1))
    jobs = [(N, q, p, check_float) for p in ps]
    if parallel and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row_args, jobs, chunksize=4))
    else:
        rows = [_row_args(job) for job in jobs]
    return rows, skipped


def write_tsv(out: TextIO, rows: Iterable[SweepRow]) -> None:
    out.write("\t".join(COLUMNS) + "\n")
    for row in rows:
        out.write(row.tsv() + "\n")


def write_json(out: TextIO, rows: Iterable[SweepRow]) -> None:
    json.dump([asdict(r) for r in rows], out, indent=2)
    out.write("\n")


def failed(rows: Iterable[SweepRow]) -> list[SweepRow]:
    return [r for r in rows if r.verify_status.split(";")[0] == str(Verdict.DISTINCT) or "mismatch" in r.verify_status]
