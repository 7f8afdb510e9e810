import pytest

from destab.algebra import HomogeneousIdeal

CATALOG = {
    "conic": (("x", "y", "z"), ["x*z - y^2"]),
    "twisted_cubic": (("x", "y", "z", "w"), ["x*z - y^2", "x*w - y*z", "y*w - z^2"]),
    "line_p3": (("x", "y", "z", "w"), ["x", "y"]),
    "point_p2": (("x", "y", "z"), ["x", "y"]),
    "plane_cubic": (("x", "y", "z"), ["y^2*z - x^3 - x*z^2"]),
}


def catalog_ideal(name):
    variables, gens = CATALOG[name]
    return HomogeneousIdeal.from_strings(variables, gens)


@pytest.fixture
def conic():
    return catalog_ideal("conic")


@pytest.fixture
def twisted_cubic():
    return catalog_ideal("twisted_cubic")


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line per criterion: call with (number, description)."""
    record = {}

    def mark(number, text):
        record["key"] = (number, text)

    yield mark
    if "key" in record:
        rep = getattr(request.node, "rep_call", None)
        ACCEPTANCE[record["key"]] = "PASS" if rep is not None and rep.passed else "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), status in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line(f"criterion {number}: {status}  {text}")
