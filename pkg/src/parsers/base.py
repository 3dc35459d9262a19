from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence


class Parser(ABC):
    """
    Abstract base class for all input parsers.

    A parser turns user-supplied text (a polynomial, an operator, an ideal)
    into the exact algebraic objects the computation routes work with.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the parser with optional configuration.

        Args:
            config: Optional configuration dictionary for the parser
        """
        self.config = dict(config or {})
        self._validate_config()

    @abstractmethod
    def _validate_config(self) -> None:
        """
        Validate the configuration provided to the parser.

        Raises:
            ValueError: If the configuration is invalid
        """
        pass

    @abstractmethod
    def parse(self, data: str) -> Any:
        """
        Parse one expression.

        Args:
            data: The expression text

        Returns:
            Any: The parsed object

        Raises:
            ValueError: If the text cannot be parsed
        """
        pass

    def parse_all(self, sources: Sequence[str]) -> List[Any]:
        """Parse several expressions against the same configuration, in order."""
        return [self.parse(src) for src in sources]

    @abstractmethod
    def get_metadata(self) -> Dict[str, Any]:
        """
        Get metadata about the parser.

        Returns:
            Dict[str, Any]: Dictionary containing metadata about the parser
        """
        pass
