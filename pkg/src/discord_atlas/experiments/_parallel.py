import os
from concurrent.futures import ThreadPoolExecutor

ENV_THREADS = "DISCORD_ATLAS_THREADS"


def thread_count(workers: int | None = None) -> int:
    """Explicit ``workers``, else $DISCORD_ATLAS_THREADS (0 = auto), else 1."""
    if workers is None:
        raw = os.environ.get(ENV_THREADS, "1").strip() or "1"
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_THREADS} must be an integer, got {raw!r}") from None
    if workers < 0:
        raise ValueError("thread count must be >= 0")
    return workers or (os.cpu_count() or 1)


def ordered_map(fn, items, workers: int | None = None) -> list:
    """map() whose output order never depends on the thread count."""
    items = list(items)
    n = thread_count(workers)
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
