import logging
import re
from inspect import signature
from typing import Any
from typing import Callable
from typing import Dict
from typing import Final
from typing import Generator
from typing import List
from typing import Mapping
from typing import Sequence
from typing import Tuple
from typing import TypeVar

from projflow._errors import ParseError
from projflow._errors import PreconditionError

logger = logging.getLogger(__name__)

Factory = TypeVar("Factory", bound=Callable[..., Any])

_ID_PATTERN = re.compile(r"^(?P<base>[A-Za-z][A-Za-z0-9_]*)(?::(?P<params>.+))?$")
_PARAM_PATTERN = re.compile(r"^(?P<name>[a-z_]+)=(?P<value>-?\d+)$")


class _NotBuiltType:
    """Sentinel value to indicate an example has not been built yet."""

    def __repr__(self):
        return "<NOT_BUILT>"

    def __bool__(self) -> bool:
        return False


NOT_BUILT: Final[_NotBuiltType] = _NotBuiltType()


class UnknownExampleError(PreconditionError):
    pass


def parse_example_id(text: str) -> Tuple[str, Dict[str, int]]:
    """
    Splits ``"E1:n=2"`` into ``("E1", {"n": 2})``; parameters are integers
    separated by commas.

    Raises:
        ParseError: the id is malformed.
    """
    match = _ID_PATTERN.match(text.strip())
    if match is None:
        raise ParseError(f"malformed example id {text!r}")
    params: Dict[str, int] = {}
    if match["params"]:
        for item in match["params"].split(","):
            param = _PARAM_PATTERN.match(item.strip())
            if param is None:
                raise ParseError(f"malformed parameter {item!r} in {text!r}")
            params[param["name"]] = int(param["value"])
    return match["base"], params


def format_example_id(base: str, params: Mapping[str, int]) -> str:
    if not params:
        return base
    return base + ":" + ",".join(f"{name}={value}" for name, value in sorted(params.items()))


class ExampleEntry:
    """
    A registered example: the factory building its record, the records
    built so far and the parameter sets listed by ``resolve_all``.
    """

    def __init__(
        self,
        factory: Callable[..., Any],
        variants: Sequence[Mapping[str, int]] = (),
    ):
        self.factory = factory
        self.variants: Tuple[Dict[str, int], ...] = tuple(dict(v) for v in variants) or ({},)
        self._built: Dict[Tuple[Tuple[str, int], ...], Any] = {}

    def resolve(self, **params: int) -> Any:
        key = tuple(sorted(params.items()))
        instance = self._built.get(key, NOT_BUILT)
        if instance is NOT_BUILT:
            instance = self.factory(**params)
            self._built[key] = instance
        return instance


class ExampleRegistry:
    """
    Named factories of worked examples, each record built once per
    parameter set.

    Registering an id again replaces the previous entry. Ids may carry
    integer parameters, ``"E1:n=2"``, which are passed to the factory as
    keyword arguments.
    """

    def __init__(self):
        self._entries: Dict[str, ExampleEntry] = {}

    def register(
        self,
        example_id: str,
        factory: Callable[..., Any],
        variants: Sequence[Mapping[str, int]] = (),
    ) -> None:
        base, params = parse_example_id(example_id)
        if params:
            raise ParseError(f"{example_id=} registers a parametrised id")
        if base in self._entries:
            logger.debug(f"replacing example {base}")
        self._entries[base] = ExampleEntry(factory, variants=variants)

    def example(
        self,
        example_id: str,
        variants: Sequence[Mapping[str, int]] = (),
    ) -> Callable[[Factory], Factory]:
        """
        Decorator form of ``register``.
        """

        def decorator(factory: Factory) -> Factory:
            self.register(example_id, factory, variants=variants)
            return factory

        return decorator

    def resolve(self, example_id: str) -> Any:
        """
        Raises:
            ParseError: the id is malformed.
            UnknownExampleError: no example is registered under the id.
        """
        base, params = parse_example_id(example_id)
        entry = self._entries.get(base)
        if entry is None:
            raise UnknownExampleError(
                f"{example_id=} is not one of {sorted(self._entries)}"
            )
        try:
            signature(entry.factory).bind(**params)
        except TypeError as error:
            raise ParseError(f"{example_id=} has unexpected parameters: {error}") from error
        return entry.resolve(**params)

    def resolve_all(self) -> Generator[Any, None, None]:
        """
        Builds every registered example and each of its listed variants, in
        registration order.
        """
        for base, entry in self._entries.items():
            for params in entry.variants:
                logger.debug(f"building example {format_example_id(base, params)}")
                yield entry.resolve(**params)

    @property
    def ids(self) -> List[str]:
        return [
            format_example_id(base, params)
            for base, entry in self._entries.items()
            for params in entry.variants
        ]
