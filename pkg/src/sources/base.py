import os
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO, Tuple


class RecordSource(ABC):
    """
    Records stored one per line in text files.

    The base class opens the files, skips blank lines and `#` comments and
    hands every other line to `parse_record`; subclasses decide what a line
    means. Each yielded record carries `source` ("path:line").
    """

    def __init__(self, file_paths: Sequence[str], config: Optional[Dict[str, Any]] = None):
        """
        Args:
            file_paths: The files to read, in order
            config: Optional configuration with the following options:
                - encoding: File encoding (default: 'utf-8')

        Raises:
            ValueError: If no file is given or a file does not exist
        """
        self.file_paths = list(file_paths)
        self.files: List[Tuple[str, TextIO]] = []
        self.config = config or {}
        self._validate_config()

    def _validate_config(self) -> None:
        self.config.setdefault("encoding", "utf-8")
        if not self.file_paths:
            raise ValueError("a record source needs at least one file")
        missing = [path for path in self.file_paths if not os.path.exists(path)]
        if missing:
            raise ValueError(f"The following record files do not exist: {missing}")

    @abstractmethod
    def parse_record(self, text: str, where: str) -> Dict[str, Any]:
        """
        Turn one stripped, non-comment line into a record.

        Raises:
            ValueError: If the line is malformed; `where` names its location
        """
        pass

    @abstractmethod
    def get_metadata(self) -> Dict[str, Any]:
        pass

    def connect(self) -> bool:
        self.close()
        try:
            for path in self.file_paths:
                self.files.append((path, open(path, "r", encoding=self.config["encoding"])))
        except (FileNotFoundError, PermissionError):
            self.close()
            raise
        return True

    def get_data(self) -> Iterator[Dict[str, Any]]:
        if not self.files:
            self.connect()
        for path, file in self.files:
            for number, line in enumerate(file, start=1):
                text = line.strip()
                if not text or text.startswith("#"):
                    continue
                where = f"{path}:{number}"
                record = self.parse_record(text, where)
                record["source"] = where
                yield record

    def __iter__(self) -> Iterator[Dict[str, Any]]:
        return self.get_data()

    def close(self) -> None:
        for _, file in self.files:
            try:
                file.close()
            except OSError:
                pass
        self.files = []

    def __enter__(self):
        self.connect()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
