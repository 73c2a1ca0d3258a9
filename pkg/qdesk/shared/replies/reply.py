import os
import tempfile
from abc import ABC, abstractmethod

from qdesk.shared.log import get_logger


class Reply(ABC):
    """
    A report artifact. Subclasses render their content in `build`; `send` writes it atomically.
    """

    EXTENSION = ""

    def __init__(self, name: str):
        self.name = name
        self.logger = get_logger("replies")

    @abstractmethod
    def build(self) -> str:
        raise NotImplementedError("Unable to call this method from the abstract class")

    @property
    def file_name(self) -> str:
        return f"{self.name}{self.EXTENSION}"

    def send(self, out_dir: str) -> str:
        """
        Writes the built artifact into the output directory. The file appears complete or not at all.
        :param out_dir: Directory receiving the file, created if missing
        :return: Path of the written file
        """
        content = self.build()
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, self.file_name)
        fd, tmp_path = tempfile.mkstemp(prefix=f".{self.name}.", dir=out_dir)
        try:
            with os.fdopen(fd, "w", encoding="UTF-8", newline="") as fh:
                fh.write(content)
            os.replace(tmp_path, path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise
        self.logger.info(f"Wrote report: {path} | Bytes: {len(content)}")
        return path
