import numpy as np
import pytest

from qdesk.ledger import (
    C_EPS,
    LOG2_N,
    LOG_N,
    N4,
    N_LOG2_N,
    ONE,
    ComplexityTerm,
    hhl_algo_term,
    lde_algo_term,
    term,
)
from qdesk.ledger.crosscheck import crosscheck_measured
from qdesk.ledger.report import ORDER_ONLY, compose
from qdesk.ledger.table import table_cells, table_reply
from qdesk.shared.errors import InvalidInputError
from qdesk.stateprep import PrepScheme
from qdesk.tomography import QstScheme

# canonical cell forms: like summands collapse, so the DM/BB-qRAM MUB cell carries log^2(N) once
TABLE = {
    ("SQST/JSM", "DM/BB-qRAM"): "N^4*(log^2(N) + C + log(N))",
    ("SQST/JSM", "FF-qRAM"): "N^4*(log(N) + C)",
    ("MUB", "DM/BB-qRAM"): "N^2*(log^2(N) + C [+ log^3(N)])",
    ("MUB", "FF-qRAM"): "N^2*(log(N) + C + log^2(N) [+ log^3(N)])",
    ("POVM", "DM/BB-qRAM"): "log^2(N) + C + N^4",
    ("POVM", "FF-qRAM"): "log(N) + C + N^4",
}


def test_term_rendering():
    assert term(N=1, logN=2).render() == "N*log^2(N)"
    assert term(N=0.5).render() == "sqrt(N)"
    assert term(3, k=2).render() == "3*k^2"
    assert ONE.render() == "1"
    assert (LOG_N + LOG_N).render() == "log(N)"
    assert (LOG2_N + C_EPS + LOG_N).render() == "log^2(N) + C + log(N)"
    assert (N4 * (LOG_N + C_EPS)).render() == "N^4*(log(N) + C)"
    assert (N4 * (LOG_N + C_EPS)).expanded().render() == "N^4*log(N) + N^4*C"
    assert (LOG_N + C_EPS).drop(C=1).render() == "log(N)"
    with pytest.raises(InvalidInputError):
        term(x=1)


def test_mub_cell_collapses_repeated_log_square():
    assert (LOG2_N + C_EPS + LOG2_N).render() == "log^2(N) + C"
    cell = table_cells()[("MUB", "DM/BB-qRAM")]
    assert cell.count("log^2(N)") == 1


def test_term_evaluation():
    assert N_LOG2_N.evaluate(N=16) == pytest.approx(256)
    assert LOG_N.evaluate(base=4, N=16) == pytest.approx(2)
    assert sorted((N4 * C_EPS).variables()) == ["C", "N"]
    with pytest.raises(InvalidInputError):
        N_LOG2_N.evaluate(k=3)


def test_algorithm_terms():
    lde = lde_algo_term(4, 16)
    assert lde.render() == "k^2 + log(N) + k*log(k)*log(N)"
    assert lde.evaluate(k=4, N=16) == pytest.approx(52)
    assert lde.evaluate(k=1, N=16) == pytest.approx(1 + 4)
    assert hhl_algo_term(2, 1, 1, 4).evaluate(m=2, s=1, t=1, N=4) == pytest.approx(8)
    with pytest.raises(InvalidInputError):
        lde_algo_term(0)
    with pytest.raises(InvalidInputError):
        hhl_algo_term(m=0)
    with pytest.raises(InvalidInputError):
        hhl_algo_term(m=2, s=-1)


def test_table_cells():
    assert table_cells() == TABLE


def test_table_reply():
    reply = table_reply()
    text = reply.build()
    assert reply.file_name == "complexity_table.txt"
    for cell in TABLE.values():
        assert cell in text
    assert ORDER_ONLY in text


@pytest.mark.parametrize(
    "prep,readout,expected",
    [
        (PrepScheme.DirectManipulation, QstScheme.SQST, "N^4*(log^2(N) + C + log(N))"),
        (PrepScheme.FlipFlopQRAM, QstScheme.AAPT_POVM, "log(N) + C + N^4"),
        (PrepScheme.FlipFlopQRAM, QstScheme.AAPT_MUB_local, "N^2*(log(N) + C + log^3(N))"),
        (PrepScheme.ConventionalQRAM, QstScheme.QPCA, "N + C + R*N*log(N)"),
    ],
)
def test_compose(prep, readout, expected):
    report = compose(prep, readout, C_EPS)
    assert report.overall.render() == expected
    payload = report.to_json(N=16, C=1, R=1)
    assert payload["caveat"] == ORDER_ONLY
    assert payload["evaluated"]["overall"] == pytest.approx(report.evaluate(N=16, C=1, R=1))


def test_direct_manipulation_keeps_reference_figure():
    report = compose(PrepScheme.DirectManipulation, QstScheme.SQST, C_EPS)
    assert report.prep_term.render() == "log^2(N)"
    assert report.prep_reference.render() == "N*log^2(N)"
    assert report.with_measured({"prep": 35}).measured == {"prep": 35}


def test_composition_distributes():
    rng = np.random.default_rng(2024)
    preps, readouts = list(PrepScheme), list(QstScheme)
    for _ in range(100):
        algo = [C_EPS, lde_algo_term(), hhl_algo_term()][int(rng.integers(3))]
        report = compose(preps[int(rng.integers(len(preps)))], readouts[int(rng.integers(len(readouts)))], algo)
        values = {
            "N": float(2 ** rng.integers(1, 11)),
            "k": float(rng.integers(1, 10)),
            "m": float(rng.integers(1, 8)),
            "s": float(rng.integers(1, 5)),
            "t": float(rng.uniform(0.1, 3)),
            "R": float(rng.integers(1, 5)),
            "C": float(rng.uniform(0.5, 50)),
        }
        expected = report.copies_factor.evaluate(**values) * report.inner.evaluate(**values)
        assert report.evaluate(**values) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("readout", list(QstScheme))
def test_overall_grows_with_size(readout):
    report = compose(PrepScheme.FlipFlopQRAM, readout, lde_algo_term())
    values = [report.evaluate(N=2 ** n, k=3, R=2) for n in range(1, 11)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_crosscheck_direct_manipulation_counts():
    counts = {8: 35, 16: 163, 32: 603, 64: 1947}
    table = crosscheck_measured(N_LOG2_N, [({"N": n}, c) for n, c in counts.items()])
    assert table.drift < 2
    assert not table.alarm
    assert table.to_json()["term"] == "N*log^2(N)"
    assert len(table.csv_rows()) == 4


def test_crosscheck_flat_and_alarm():
    flat = crosscheck_measured(ONE, [({"N": n}, 5) for n in (2, 4, 8)])
    assert flat.ratios == [5.0, 5.0, 5.0]
    assert flat.drift == 1.0
    linear = crosscheck_measured(ONE, [({"N": n}, n) for n in (2, 4, 8)])
    assert linear.drift == pytest.approx(4.0)
    assert linear.alarm
    with pytest.raises(InvalidInputError):
        crosscheck_measured(ONE, [({"N": 2}, 1), ({"N": 4}, 1)])


def test_crosscheck_against_composed_report():
    report = compose(PrepScheme.DirectManipulation, QstScheme.AAPT_POVM, C_EPS)
    samples = [({"N": n}, c) for n, c in ((4, 4), (8, 9), (16, 16))]
    table = crosscheck_measured(report, samples, part="prep")
    assert table.term.render() == "log^2(N)"
    assert table.ratios == pytest.approx([1.0, 1.0, 1.0])
    assert table.ratios == pytest.approx(crosscheck_measured(LOG2_N, samples).ratios)
    with pytest.raises(InvalidInputError):
        crosscheck_measured(report, samples, part="decoding")


def test_term_json():
    assert ComplexityTerm.primitive(2, N=2).to_json() == {"expression": "2*N^2"}
