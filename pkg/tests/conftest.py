from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def comps(max_size=6, min_size=0):
    """Compositions with total size in [min_size, max_size]."""
    return st.lists(st.integers(1, max_size), max_size=max_size).filter(
        lambda ps: min_size <= sum(ps) <= max_size
    ).map(tuple)


def packed(max_len=4):
    """Packed words, built by packing a random word."""
    from qsymops.words import pack

    return st.lists(st.integers(1, max_len), max_size=max_len).map(lambda w: pack(w) if w else ())


def perms(max_len=4):
    return st.integers(0, max_len).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
    )


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
