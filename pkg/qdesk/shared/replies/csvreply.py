import csv
import io
from typing import Any, List, Sequence

from qdesk.shared.replies.reply import Reply


class CsvReply(Reply):

    EXTENSION = ".csv"

    def __init__(self, name: str, header: Sequence[str], rows: List[Sequence[Any]]):
        super(CsvReply, self).__init__(name=name)
        self.header = list(header)
        self.rows = rows

    def build(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.header)
        for row in self.rows:
            writer.writerow([self._cell(v) for v in row])
        return buffer.getvalue()

    @staticmethod
    def _cell(value: Any) -> str:
        if isinstance(value, float):
            return repr(value)
        return str(value)
