import pytest

acceptance_key = pytest.StashKey[dict]()


@pytest.fixture
def record_criterion(request):
    table = request.config.stash.setdefault(acceptance_key, {})

    def record(num, name, ok, note=""):
        table[num] = (name, ok, note)
        print(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {name}  {note}".rstrip())

    return record


def pytest_terminal_summary(terminalreporter, config):
    table = config.stash.get(acceptance_key, {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(table):
        name, ok, note = table[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {name}  {note}".rstrip())
