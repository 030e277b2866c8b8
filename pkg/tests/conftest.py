import sys

from hypothesis import strategies as st

from simcores.partitions import Partition

partitions = st.lists(st.integers(1, 12), max_size=10).map(
    lambda parts: Partition(sorted(parts, reverse=True)))


def from_frobenius(arms):
    """Self-conjugate partition with Frobenius symbol (arms | arms)."""
    arms = sorted(set(arms), reverse=True)
    d = len(arms)
    top = [a + i for i, a in enumerate(arms, start=1)]
    rest = [sum(1 for t in top if t >= i) for i in range(d + 1, (top[0] if top else 0) + 1)]
    return Partition(top + [x for x in rest if x])


self_conjugate_partitions = st.lists(st.integers(0, 9), unique=True, max_size=6).map(from_frobenius)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
