"""In-repo example systems: the DEMO controller, its three-task variant and the chain system."""

from importlib import resources

FIXTURES = {
    "demo": ("demo.cdl", "demo.flow"),
    "demo3": ("demo.cdl", "demo3.flow"),
    "chain": ("chain.cdl", "chain.flow"),
}


def fixture_path(name):
    return resources.files(__name__) / name


def read_fixture(name):
    return fixture_path(name).read_text(encoding="utf-8")


def load_fixture(name):
    """Return (cdl_text, flow_text) for a named system."""
    cdl, flow = FIXTURES[name]
    return read_fixture(cdl), read_fixture(flow)
