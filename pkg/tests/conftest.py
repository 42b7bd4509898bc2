from pathlib import Path

import pytest

from sumforge import load_corpus, load_stopwords, prepare_document

ROOT = Path(__file__).resolve().parents[1]
CORPUS_DIR = ROOT / "data" / "corpus"
REFERENCE = ROOT / "data" / "reference" / "proxy_reference.txt"
GOLDEN = Path(__file__).resolve().parent / "golden"

_acceptance_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when not in ("setup", "call"):
        return
    key = (marker.args[0], marker.args[1])
    passed = _acceptance_results.get(key, True) and report.passed
    if report.when == "setup" and report.passed:
        return
    _acceptance_results[key] = passed


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_acceptance_results.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}")


@pytest.fixture(scope="session")
def stopwords():
    return load_stopwords()


@pytest.fixture(scope="session")
def corpus_doc():
    return load_corpus(CORPUS_DIR, concat=True).documents[0]


@pytest.fixture(scope="session")
def prepared_doc(corpus_doc, stopwords):
    return prepare_document(corpus_doc, stopwords)


@pytest.fixture(scope="session")
def reference_text():
    return REFERENCE.read_text(encoding="utf-8")
