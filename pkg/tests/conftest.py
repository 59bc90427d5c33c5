import os
import tempfile

import pytest

# oracle results go to a throwaway directory unless the caller chose one
os.environ.setdefault("GREENBLOCKS_CACHE_DIR", tempfile.mkdtemp(prefix="greenblocks-cache-"))

ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def gl_tables():
    from greenblocks.blocks import gl_principal_block
    from greenblocks.lusztig import factorize
    return {n: factorize(gl_principal_block(n)) for n in range(1, 6)}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
