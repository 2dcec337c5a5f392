import asyncio
from pathlib import Path

from src import server

TESTDATA = Path(__file__).resolve().parent.parent / "testdata"


def call(tool, **kwargs):
    return asyncio.run(tool(**kwargs))


def test_milnor_degree_tool():
    text = (TESTDATA / "borromean.mlnk").read_text(encoding="utf-8")
    result = call(server.milnor_degree, link_text=text)
    assert result["status"] == "success"
    assert (result["degree"], result["exact"], result["cap"]) == (2, True, 3)
    assert (result["witness"], result["coefficient"]) == ("mu(231)", 1)


def test_milnor_degree_tool_reports_parse_errors():
    result = call(server.milnor_degree, link_text="components 2\nlongitude 1 = m7\n")
    assert result["status"] == "failed"
    assert "line 2" in result["error"]


def test_classify_cyclic_form_tool():
    result = call(server.classify_cyclic_form, q=1, n=40, split="5,8")
    assert result["status"] == "success"
    assert result["simple"] is True
    assert result["verdict"] == "infinite_degree"
    assert result["summands"] == ["(2/5)", "(5/8)"]

    assert call(server.classify_cyclic_form, q=2, n=4)["status"] == "failed"


def test_non_semisimple_table_tool():
    result = call(server.non_semisimple_table, limit=8)
    assert result["rows"] == [{"n": 5, "representatives": [2]}, {"n": 8, "representatives": [3]}]


def test_counts_and_bounds_tools():
    assert call(server.milnor_counts, r=2, k=7)["witt"] == 18
    assert call(server.milnor_counts, r=1, k=2)["status"] == "failed"

    bound = call(server.quantum_bound, b_p=4, o_hat="3/2")
    assert (bound["bound"], bound["floor"]) == ("11/5", 2)
    assert call(server.quantum_bound, b_p=1, o_hat="1")["status"] == "failed"

    plan = call(server.realization, b=7, d=2)
    assert plan["recipe"] == "2 x M(0,0,0) # M(0,5,5)"
    assert call(server.realization, b=2)["d"] == "infinite"
