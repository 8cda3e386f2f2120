from trestles.graphs import path_graph, spider
from trestles.verify import TrestleCertificate, verify_trestle


def _cycle(edges_n):
    return [(i, (i + 1) % edges_n) for i in range(edges_n)]


def test_valid_certificate_passes():
    p = path_graph(5)
    cert = TrestleCertificate.of(p, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)], 2)
    report = verify_trestle(cert)
    assert report.passed()
    assert report.failed_checks() == []


def test_edge_outside_square_fails():
    p = path_graph(5)
    cert = TrestleCertificate.of(p, [(0, 4), (0, 2), (1, 3), (1, 2), (3, 4)], 2)
    report = verify_trestle(cert)
    assert "edges_in_square" in report.failed_checks()


def test_missing_vertex_fails_spanning():
    p = path_graph(5)
    cert = TrestleCertificate.of(p, [(0, 1), (1, 2), (0, 2)], 2)
    report = verify_trestle(cert)
    assert "spanning" in report.failed_checks()


def test_cutvertex_fails_two_connected():
    p = path_graph(5)
    edges = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]
    report = verify_trestle(TrestleCertificate.of(p, edges, 3))
    assert "two_connected" in report.failed_checks()
    detail = [c for c in report.checks if c.check == "two_connected"][0].detail
    assert "cutvertex" in detail


def test_degree_cap():
    s = spider(3)
    # the full square exceeds degree 3 at the centre
    from trestles.graphs import square

    sq = square(s)
    report = verify_trestle(TrestleCertificate.of(s, sq.edges(), 3))
    assert "max_degree" in report.failed_checks()


def test_matching_condition_checked():
    s = spider(3)
    edges = [(0, 4), (1, 4), (0, 5), (2, 5), (0, 6), (3, 6), (1, 2), (2, 3)]
    # degree-3 vertices are 0 and 2
    good = verify_trestle(
        TrestleCertificate.of(s, edges, 3, matching_edges=[(0, 1), (2, 5)])
    )
    assert good.passed()
    bad = verify_trestle(
        TrestleCertificate.of(s, edges, 3, matching_edges=[(0, 1)])
    )
    assert "degree3_matched" in bad.failed_checks()


def test_exact_degrees():
    p = path_graph(5)
    cert = TrestleCertificate.of(
        p,
        [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)],
        2,
        expected_degrees=[2, 2, 2, 2, 2],
    )
    assert verify_trestle(cert).passed()
    wrong = TrestleCertificate.of(
        p,
        [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)],
        2,
        expected_degrees=[3, 2, 2, 2, 1],
    )
    assert "exact_degrees" in verify_trestle(wrong).failed_checks()


def test_report_serialization():
    p = path_graph(5)
    cert = TrestleCertificate.of(p, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)], 2)
    rows = verify_trestle(cert).to_jsonable()
    assert all(set(r) == {"check", "pass", "detail"} for r in rows)
