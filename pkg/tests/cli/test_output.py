import json

from pydantic import BaseModel

from radbound.cli.output import TableWriter
from radbound.core.constants import OutputFormat


class Row(BaseModel):
    name: str
    value: float | None = None
    flag: bool | None = None
    count: int = 0


ROWS = [
    Row(name="a", value=0.1, flag=True, count=2),
    Row(name="b,c", value=None, flag=False),
]


class TestTableWriter:

    def test_csv(self):
        """Test header order and cell encoding"""
        text = TableWriter.render(ROWS, OutputFormat.CSV)

        assert text == 'name,value,flag,count\na,0.1,true,2\n"b,c",,false,0\n'

    def test_json(self):
        """Test JSON rows"""
        data = json.loads(TableWriter.render(ROWS, OutputFormat.JSON))

        assert data == [
            {"name": "a", "value": 0.1, "flag": True, "count": 2},
            {"name": "b,c", "value": None, "flag": False, "count": 0},
        ]

    def test_float_repr(self):
        """Test floats keep full precision"""
        text = TableWriter.render([Row(name="x", value=1 / 3)], OutputFormat.CSV)

        assert repr(1 / 3) in text

    def test_write_file(self, tmp_path):
        """Test writing to a path"""
        out = tmp_path / "rows.csv"

        text = TableWriter.write(ROWS, OutputFormat.CSV, out)

        assert out.read_text(encoding="utf-8") == text

    def test_empty(self):
        """Test no rows"""
        assert TableWriter.render([], OutputFormat.JSON) == "[]\n"
