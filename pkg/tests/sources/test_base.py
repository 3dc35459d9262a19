import os
import tempfile
import unittest
from unittest.mock import MagicMock

from src.sources.base import RecordSource


class CommandListSource(RecordSource):
    """A record source whose lines are space separated command lines."""

    def parse_record(self, text, where):
        if text.startswith("-"):
            raise ValueError(f"{where}: a command line cannot start with an option")
        return {"argv": text.split()}

    def get_metadata(self):
        return {"source_type": "commands"}


class TestRecordSource(unittest.TestCase):
    """Test cases for the RecordSource abstract base class."""

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.temp_dir.name, "commands.txt")
        with open(self.path, "w", encoding="utf-8") as file:
            file.write("lct --vars x x^2\n# a comment\n\nspectrum --vars x,y x^2+y^3\n")

    def tearDown(self):
        self.temp_dir.cleanup()

    def test_default_config(self):
        """Test that the encoding defaults to utf-8."""
        self.assertEqual({"encoding": "utf-8"}, CommandListSource([self.path]).config)

    def test_custom_config(self):
        """Test that a given encoding is kept."""
        source = CommandListSource([self.path], {"encoding": "latin-1"})
        self.assertEqual("latin-1", source.config["encoding"])

    def test_needs_files(self):
        """Test that an empty or missing file list is rejected."""
        with self.assertRaises(ValueError):
            CommandListSource([])
        with self.assertRaises(ValueError):
            CommandListSource([os.path.join(self.temp_dir.name, "missing.txt")])

    def test_iteration_skips_comments(self):
        """Test that iterating yields parsed records with their location."""
        with CommandListSource([self.path]) as source:
            records = list(source)
        self.assertEqual(["lct", "spectrum"], [r["argv"][0] for r in records])
        self.assertEqual([f"{self.path}:1", f"{self.path}:4"], [r["source"] for r in records])

    def test_parse_errors_propagate(self):
        """Test that a malformed line stops iteration with its location."""
        with open(self.path, "a", encoding="utf-8") as file:
            file.write("--vars x\n")
        with CommandListSource([self.path]) as source:
            with self.assertRaises(ValueError) as context:
                list(source)
        self.assertIn(f"{self.path}:5", str(context.exception))

    def test_context_manager(self):
        """Test that the context manager connects and closes."""
        source = CommandListSource([self.path])
        source.connect = MagicMock(return_value=True)
        source.close = MagicMock()
        with source as entered:
            source.connect.assert_called_once()
            self.assertIs(source, entered)
        source.close.assert_called_once()

    def test_close_releases_files(self):
        """Test that close empties the open file list."""
        source = CommandListSource([self.path])
        source.connect()
        self.assertEqual(1, len(source.files))
        source.close()
        self.assertEqual([], source.files)


if __name__ == "__main__":
    unittest.main()
