"""Test ready-to-use decorators."""

import typing as t
from fractions import Fraction
from unittest.mock import Mock

import pytest

from laplace_expansion.caches import LRUCache
from laplace_expansion.constants import LOG_CALL_FMT_STR
from laplace_expansion.decorators import intercept, log_call, memoize
from laplace_expansion.exceptions import InvalidProblemError, TruncationError


@pytest.mark.parametrize(
    "raises, catch, reraise, include_handler",
    [
        (Exception, Exception, ValueError, False),
        (Exception, Exception, ValueError, True),
        (Exception, Exception, True, True),
        (Exception, Exception, True, False),
        (None, Exception, ValueError, False),
        (None, Exception, ValueError, True),
        (Exception, Exception, None, False),
        (Exception, Exception, None, True),
        (Exception, RuntimeError, ValueError, False),  # won't catch
        (Exception, RuntimeError, ValueError, True),  # won't catch
    ],
)
def test_intercept(raises, catch, reraise, include_handler):
    """Test the intercept decorator"""
    wrapped = Mock()
    wrapped.__name__ = str("wrapped")

    if raises is not None:
        wrapped.side_effect = raises

    handler = Mock(name="handler") if include_handler else None

    fn = intercept(catch=catch, reraise=reraise, handler=handler)(wrapped)

    will_catch = raises and issubclass(raises, catch)

    if reraise and will_catch:
        to_be_raised = raises if reraise is True else reraise
        with pytest.raises(to_be_raised):
            fn()
    elif raises and not will_catch:
        with pytest.raises(raises):
            fn()
    else:
        fn()

    if handler is not None and will_catch:
        assert isinstance(handler.call_args[0][0], raises)

    if handler is not None and not will_catch:
        handler.assert_not_called()

    wrapped.assert_called_once_with()


class TestInterceptProblemErrors:
    """intercept as used for problem documents"""

    @staticmethod
    @intercept(
        catch=(KeyError, ValueError),
        reraise=InvalidProblemError,
        err_msg="bad document: {exc}",
    )
    def read_alpha(doc):
        if doc.get("short"):
            raise TruncationError("too short")
        return Fraction(doc["alpha"])

    def test_passes_result(self):
        """Values are returned unchanged"""
        assert self.read_alpha({"alpha": "3/2"}) == Fraction(3, 2)

    @pytest.mark.parametrize("doc", [{}, {"alpha": "x"}])
    def test_converts_and_chains(self, doc):
        """Low-level errors become InvalidProblemError with a cause"""
        with pytest.raises(InvalidProblemError) as info:
            self.read_alpha(doc)
        assert str(info.value).startswith("bad document: ")
        assert isinstance(info.value.__cause__, (KeyError, ValueError))

    def test_package_errors_pass_through(self):
        """Errors of our own hierarchy are not rewrapped"""
        with pytest.raises(TruncationError, match="too short"):
            self.read_alpha({"short": True})

    def test_no_context(self):
        """include_context=False leaves no explicit cause"""

        @intercept(
            catch=KeyError, reraise=InvalidProblemError, include_context=False
        )
        def lookup(doc):
            return doc["missing"]

        with pytest.raises(InvalidProblemError) as info:
            lookup({})
        assert info.value.__cause__ is None


class TestLogCall:
    """Tests for the log_call decorator"""

    @staticmethod
    def _logger(enabled=True):
        logger = Mock()
        logger.isEnabledFor.return_value = enabled
        return logger

    def test_log_call(self):
        """The message lists args, kwargs, result and timing"""
        logger = self._logger()

        @log_call(logger=logger, level="debug")
        def func(*args, **kwargs):
            return Fraction(1, 12)

        assert func(Fraction(-1, 3), [1, Fraction(1, 2)], n="x") == Fraction(
            1, 12
        )

        msg = logger.debug.call_args[0][0]
        expected_start = LOG_CALL_FMT_STR.split("[")[0].format(
            name="func", args="-1/3, [1, 1/2], n='x'", result="1/12"
        )
        assert msg.startswith(expected_start)
        assert msg.endswith("s]")

    def test_disabled_logger_is_skipped(self):
        """No message is formatted for a disabled level"""
        logger = self._logger(enabled=False)

        @log_call(logger=logger, level="info")
        def func():
            return 1

        assert func() == 1
        logger.info.assert_not_called()

    def test_custom_format(self):
        """A custom format string is honored"""
        logger = self._logger()

        @log_call(logger=logger, level="warning", format_str="{name}={result}")
        def answer():
            return 42

        answer()
        logger.warning.assert_called_once_with("answer=42")


class TestMemoization:
    """Tests for memoization"""

    # (args, kwargs)
    memoizable_calls: t.Tuple[t.Tuple, ...] = (
        ((Fraction(1, 2), 3), {"k": 2}),
        (([Fraction(1), Fraction(-1, 3)],), {}),
        ((lambda x: "foo",), {"c": lambda y: "bar"}),
        (({"a": "a"},), {"c": "d"}),
        ((), {}),
        ((1, 2, 3), {}),
    )

    @pytest.mark.parametrize("args, kwargs", memoizable_calls)
    def test_memoize_basic(self, args, kwargs):
        """Test basic use of the memoize decorator"""
        tracker = Mock(return_value="foo")

        @memoize()
        def func(*args, **kwargs):
            return tracker(args, kwargs)

        assert func(*args, **kwargs) == "foo"
        tracker.assert_called_once_with(args, kwargs)

        assert func(*args, **kwargs) == "foo"
        assert len(tracker.mock_calls) == 1

    def test_list_and_tuple_share_a_slot(self):
        """Equal coefficient lists and tuples hit the same entry"""
        tracker = Mock(return_value=0)

        @memoize()
        def func(values):
            return tracker(values)

        func([Fraction(1), Fraction(2)])
        func((Fraction(1), Fraction(2)))
        assert len(tracker.mock_calls) == 1

    def test_memoize_lru(self):
        """A bounded cache forgets the least recently used call"""
        tracker = Mock(return_value="foo")

        @memoize(keep=2, cache_class=LRUCache)
        def func(n):
            return tracker(n)

        func(1)
        func(2)
        func(1)
        func(3)  # evicts 2
        assert len(tracker.mock_calls) == 3
        func(1)
        assert len(tracker.mock_calls) == 3
        func(2)
        assert len(tracker.mock_calls) == 4
