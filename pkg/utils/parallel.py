"""Pair-level parallelism with results in submission order."""
import logging
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any, Callable, Sequence

from tqdm import tqdm

logger = logging.getLogger("Parallel")


def run_ordered(
    fn: Callable[..., Any],
    tasks: Sequence[tuple],
    workers: int = 1,
    progress: bool = False,
    desc: str = "",
) -> list[Any]:
    bar = tqdm(total=len(tasks), desc=desc, disable=not progress, file=sys.stderr)
    try:
        if workers <= 1 or len(tasks) <= 1:
            results = []
            for task in tasks:
                results.append(fn(*task))
                bar.update(1)
            return results

        logger.info(f"running {len(tasks)} tasks on {workers} processes")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(fn, *task) for task in tasks]
            for _ in as_completed(futures):
                bar.update(1)
            return [future.result() for future in futures]
    finally:
        bar.close()
