from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor


def ordered_map[T, R](fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    """
    Map fn over items, in parallel when jobs > 1.

    Results always come back in input order, so any reduction done by the
    caller is independent of the worker count.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(fn, items))
