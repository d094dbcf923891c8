"""Tests for .bfn parsing and writing."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.boolfn.io import (
    parse_function_file,
    read_function_file,
    save_function_file,
    write_function_file,
)
from src.boolfn.models import Entry, PartialFunction
from src.config import settings
from src.errors import FunctionFileError, RegisterLimitError


class TestParseFunctionFile:
    """Tests for the parser."""

    def test_xor(self):
        partial = parse_function_file("n=2\n0110")
        assert partial.symbols() == "0110"
        assert partial.d == 0

    def test_dont_cares(self):
        partial = parse_function_file("n=2\n0-1-\n")
        assert [partial.entry(i) for i in range(4)] == [
            Entry.ZERO,
            Entry.DONT_CARE,
            Entry.ONE,
            Entry.DONT_CARE,
        ]

    def test_comments_and_blank_lines(self):
        partial = parse_function_file("# header comment\n\nn=1\n# body follows\n1-\n\n")
        assert partial.symbols() == "1-"

    def test_crlf(self):
        assert parse_function_file("n=2\r\n0110\r\n").symbols() == "0110"

    def test_indented_lines(self):
        assert parse_function_file("  n=2\n\t0110  \n").symbols() == "0110"

    def test_indented_illegal_character(self):
        with pytest.raises(FunctionFileError) as exc_info:
            parse_function_file("n=2\n  01x0")
        assert (exc_info.value.line, exc_info.value.column) == (2, 5)

    def test_indented_bad_header_value(self):
        with pytest.raises(FunctionFileError) as exc_info:
            parse_function_file("  n=two\n0110")
        assert exc_info.value.column == 5

    def test_byte_order_mark(self):
        assert parse_function_file("\ufeffn=2\n0110\n").symbols() == "0110"

    def test_short_body(self):
        with pytest.raises(FunctionFileError) as exc_info:
            parse_function_file("n=2\n011")
        error = exc_info.value
        assert (error.line, error.column) == (2, 4)
        assert "expected 4 characters" in str(error)

    def test_long_body(self):
        with pytest.raises(FunctionFileError) as exc_info:
            parse_function_file("n=1\n010")
        assert exc_info.value.column == 3

    def test_illegal_character(self):
        with pytest.raises(FunctionFileError) as exc_info:
            parse_function_file("n=2\n01x0")
        assert (exc_info.value.line, exc_info.value.column) == (2, 3)

    def test_bad_header(self):
        with pytest.raises(FunctionFileError) as exc_info:
            parse_function_file("m=2\n0110")
        assert exc_info.value.column == 1

    def test_bad_header_value(self):
        with pytest.raises(FunctionFileError) as exc_info:
            parse_function_file("n=two\n0110")
        assert exc_info.value.column == 3

    def test_zero_inputs(self):
        with pytest.raises(FunctionFileError):
            parse_function_file("n=0\n0")

    def test_missing_body(self):
        with pytest.raises(FunctionFileError, match="missing function body"):
            parse_function_file("n=2\n")

    def test_extra_content(self):
        with pytest.raises(FunctionFileError) as exc_info:
            parse_function_file("n=1\n01\n10\n")
        assert exc_info.value.line == 3

    def test_empty(self):
        with pytest.raises(FunctionFileError, match="missing header"):
            parse_function_file("")

    def test_register_limit(self, monkeypatch):
        monkeypatch.setattr(settings, "max_register_qubits", 3)
        with pytest.raises(RegisterLimitError):
            parse_function_file("n=4\n" + "0" * 16)


class TestWriteFunctionFile:
    """Tests for serialization."""

    def test_format(self):
        assert write_function_file(PartialFunction.from_symbols("0-1-")) == "n=2\n0-1-\n"

    @given(st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.text(alphabet="01-", min_size=1 << n, max_size=1 << n)
    ))
    def test_parse_inverts_write(self, symbols):
        partial = PartialFunction.from_symbols(symbols)
        assert parse_function_file(write_function_file(partial)) == partial

    def test_save_and_read(self, tmp_path):
        path = tmp_path / "f.bfn"
        partial = PartialFunction.from_symbols("1--0-01-")
        save_function_file(partial, path)
        assert read_function_file(path) == partial

    def test_read_with_byte_order_mark(self, tmp_path):
        path = tmp_path / "bom.bfn"
        path.write_bytes(b"\xef\xbb\xbfn=2\r\n1001\r\n")
        assert read_function_file(path).symbols() == "1001"
