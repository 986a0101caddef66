"""Prime-range sweeps for pi_f(x, z): chunked workers, JSONL sinks, checkpoints.

Primes are processed in blocks; each block is split into contiguous chunks,
one per worker, and the chunk results are concatenated in chunk order. All
counters are integers, so any worker count gives identical output.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

import numpy as np

from .arith import primes_array, primes_up_to
from .poly import IntPolynomial

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CHECKPOINT_EVERY = 100_000


class CheckpointMismatch(RuntimeError):
    pass


@dataclass
class SweepSummary:
    x: int
    pi_f: int
    pi: int

    @property
    def ratio(self) -> float:
        return self.pi_f / self.pi if self.pi else 0.0

    def to_json(self) -> dict:
        return {"x": self.x, "pi_f": self.pi_f, "pi": self.pi, "ratio": self.ratio}


def prime_divisors_of_predecessors(ps: np.ndarray) -> list[list[int]]:
    """Distinct prime divisors of ``p - 1`` for each entry of ``ps``.

    Small primes are stripped column-wise over the whole array; whatever is
    left above ``sqrt(max p)`` is itself prime.
    """
    rem = ps.astype(np.int64) - 1
    divs: list[list[int]] = [[] for _ in range(len(ps))]
    if len(ps) == 0:
        return divs
    for q in primes_up_to(math.isqrt(int(ps.max())) + 1).tolist():
        idx = np.flatnonzero(rem % q == 0)
        if idx.size == 0:
            continue
        for i in idx.tolist():
            divs[i].append(q)
        sub = rem[idx]
        m = sub % q == 0
        while m.any():
            sub[m] //= q
            m = sub % q == 0
        rem[idx] = sub
    for i in np.flatnonzero(rem > 1).tolist():
        divs[i].append(int(rem[i]))
    return divs


def _full_order(a: int, p: int, qs: list[int]) -> bool:
    return a != 0 and all(pow(a, (p - 1) // q, p) != 1 for q in qs)


def chunk_hits(ps: np.ndarray, z: int, fz: int) -> list[tuple[int, bool]]:
    out = []
    for p, qs in zip(ps.tolist(), prime_divisors_of_predecessors(ps)):
        out.append((p, _full_order(z % p, p, qs) and _full_order(fz % p, p, qs)))
    return out


def _chunk_task(args):
    return chunk_hits(*args)


def params_digest(z: int, f: IntPolynomial) -> str:
    payload = json.dumps({"z": z, "poly": str(f), "normalization": "pi"}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


def default_workers() -> int:
    return int(os.environ.get("SIMROOTS_WORKERS", "1"))


def _write_checkpoint(path: Path, digest: str, last_prime: int, pi_f: int, pi: int) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(
        json.dumps(
            {
                "schema_version": SCHEMA_VERSION,
                "params_digest": digest,
                "last_prime": last_prime,
                "counters": {"pi_f": pi_f, "pi": pi},
            }
        )
    )
    os.replace(tmp, path)


def load_checkpoint(path: Path, digest: str) -> dict:
    data = json.loads(Path(path).read_text())
    if data.get("schema_version") != SCHEMA_VERSION:
        raise CheckpointMismatch(f"unsupported checkpoint schema {data.get('schema_version')!r}")
    if data.get("params_digest") != digest:
        raise CheckpointMismatch("checkpoint was written for different parameters")
    return data


def run_sweep(
    z: int,
    f: IntPolynomial,
    x_max: int,
    workers: int = 1,
    sink: Callable[[list[tuple[int, bool]]], None] | None = None,
    checkpoint: str | os.PathLike | None = None,
    resume: bool = False,
    block_primes: int = CHECKPOINT_EVERY,
    max_blocks: int | None = None,
) -> SweepSummary:
    """Evaluate every prime ``p <= x_max``; returns the running totals.

    ``sink`` receives each block's records in ascending order. With
    ``checkpoint`` set, a checkpoint is written after every block; with
    ``resume`` the sweep restarts after the checkpoint's ``last_prime``.
    ``max_blocks`` stops early, leaving a resumable checkpoint behind.
    """
    digest = params_digest(z, f)
    fz = f(z)
    pi_f = pi = 0
    last = 1
    ckpt = Path(checkpoint) if checkpoint is not None else None
    if resume and ckpt is not None and ckpt.exists():
        data = load_checkpoint(ckpt, digest)
        last = data["last_prime"]
        if last > x_max:
            raise CheckpointMismatch(f"checkpoint already past x_max ({last} > {x_max})")
        pi_f, pi = data["counters"]["pi_f"], data["counters"]["pi"]
        log.info("resuming after p=%d (pi=%d, pi_f=%d)", last, pi, pi_f)

    ps = primes_array(last + 1, x_max)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for b, start in enumerate(range(0, len(ps), block_primes)):
            if max_blocks is not None and b >= max_blocks:
                break
            block = ps[start : start + block_primes]
            chunks = [c for c in np.array_split(block, max(workers, 1)) if len(c)]
            tasks = [(c, z, fz) for c in chunks]
            parts = pool.map(_chunk_task, tasks) if pool else map(_chunk_task, tasks)
            records = [r for part in parts for r in part]
            pi += len(records)
            pi_f += sum(hit for _, hit in records)
            if sink is not None:
                sink(records)
            if ckpt is not None:
                _write_checkpoint(ckpt, digest, records[-1][0], pi_f, pi)
    finally:
        if pool is not None:
            pool.shutdown()
    return SweepSummary(x_max, pi_f, pi)


class JsonlSink:
    """Appends ``{"p": .., "hit": ..}`` lines to a stream."""

    def __init__(self, stream):
        self.stream = stream

    def __call__(self, records: Iterable[tuple[int, bool]]) -> None:
        for p, hit in records:
            self.stream.write(json.dumps({"p": p, "hit": hit}) + "\n")
        self.stream.flush()

    def summary(self, s: SweepSummary) -> None:
        self.stream.write(json.dumps({"summary": s.to_json()}) + "\n")
        self.stream.flush()


def truncate_jsonl(path: Path, last_prime: int) -> None:
    """Drop every line past ``last_prime`` (and any summary) before resuming."""
    if not path.exists():
        return
    keep = []
    with path.open() as fh:
        for line in fh:
            rec = json.loads(line)
            if "p" in rec and rec["p"] <= last_prime:
                keep.append(line)
    path.write_text("".join(keep))
