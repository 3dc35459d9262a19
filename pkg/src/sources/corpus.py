import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from src.sources.base import RecordSource


def default_corpus_path() -> Path:
    return Path(__file__).resolve().parents[2] / "resources" / "corpus" / "corpus.jsonl"


class CorpusSource(RecordSource):
    """
    Golden corpus stored as JSON lines.

    Every record is one object {"argv": [...], "expected": {...}}: a CLI
    request and the result it must produce.
    """

    def __init__(
        self,
        file_paths: Optional[Union[str, List[str]]] = None,
        config: Optional[Dict[str, Any]] = None,
    ):
        """
        Args:
            file_paths: Path or list of paths (default: the bundled corpus)
            config: Optional configuration, see RecordSource
        """
        if file_paths is None:
            file_paths = [str(default_corpus_path())]
        super().__init__([file_paths] if isinstance(file_paths, str) else file_paths, config)

    def parse_record(self, text: str, where: str) -> Dict[str, Any]:
        """
        Raises:
            ValueError: If the line is not a JSON object with `argv` and `expected`
        """
        try:
            record = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"{where}: invalid JSON: {e.msg}") from None
        if not isinstance(record, dict) or "argv" not in record or "expected" not in record:
            raise ValueError(f"{where}: a record needs 'argv' and 'expected'")
        if not isinstance(record["argv"], list):
            raise ValueError(f"{where}: 'argv' must be a list")
        return record

    def get_metadata(self) -> Dict[str, Any]:
        return {"source_type": "corpus", "files": list(self.file_paths)}
