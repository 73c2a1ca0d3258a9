from typing import List, Sequence

from qdesk.shared.replies.reply import Reply


class TextReply(Reply):
    """
    Column-aligned plain-text table.
    """

    EXTENSION = ".txt"

    def __init__(self, name: str, header: Sequence[str], rows: List[Sequence[str]], footer: str = ""):
        super(TextReply, self).__init__(name=name)
        self.header = list(header)
        self.rows = [list(r) for r in rows]
        self.footer = footer

    def build(self) -> str:
        widths = [len(h) for h in self.header]
        for row in self.rows:
            for i, cell in enumerate(row):
                widths[i] = max(widths[i], len(cell))

        def line(cells: Sequence[str]) -> str:
            return " | ".join(c.ljust(widths[i]) for i, c in enumerate(cells)).rstrip()

        rule = "-+-".join("-" * w for w in widths)
        out = [line(self.header), rule] + [line(r) for r in self.rows]
        if self.footer:
            out += ["", self.footer]
        return "\n".join(out) + "\n"
