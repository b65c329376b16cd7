from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cmgrass.exact import QMatrix
from cmgrass.partitions import partitions_of

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def matrices(min_n: int = 1, max_n: int = 4, square: bool = True):
    @st.composite
    def build(draw):
        r = draw(st.integers(min_n, max_n))
        c = r if square else draw(st.integers(min_n, max_n))
        return QMatrix([[draw(small_rationals) for _ in range(c)] for _ in range(r)], c)

    return build()


def partitions(min_n: int = 1, max_n: int = 6):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(partitions_of(n)))


# verdicts recorded by the acceptance module: criterion -> [(passed, detail)]
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


def record(criterion: int, passed: bool, detail: str) -> None:
    ACCEPTANCE.setdefault(criterion, []).append((passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[criterion]
        verdict = "PASS" if all(ok for ok, _ in parts) else "FAIL"
        terminalreporter.write_line(f"criterion {criterion:2d}: {verdict}  ({'; '.join(d for _, d in parts)})")
