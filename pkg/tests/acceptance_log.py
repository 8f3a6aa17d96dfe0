"""Collects one verdict line per acceptance criterion for the terminal summary."""
_results = {}


def record(n: int, ok: bool, detail: str) -> None:
    _results[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(_results[n])


def lines():
    return [_results[k] for k in sorted(_results)]
