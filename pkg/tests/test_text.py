"""Tests for the word and spec text codec."""

import pytest

from balanced_episturmian.exceptions import WordParseError
from balanced_episturmian.words.text import (
    parse_bracketed,
    parse_word,
    render_bracketed,
    render_word,
)


class TestParseWord:
    """Tests for parse_word."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            pytest.param("", (), id="empty"),
            pytest.param("1213", (1, 2, 1, 3), id="digits"),
            pytest.param(" 12 ", (1, 2), id="surrounding_whitespace"),
            pytest.param("1.2.13.1", (1, 2, 13, 1), id="dotted"),
            pytest.param("13.", (13,), id="dotted_single_letter"),
        ],
    )
    def test_valid(self, text: str, expected: tuple[int, ...]) -> None:
        assert parse_word(text) == expected

    @pytest.mark.parametrize(
        ("text", "token", "position"),
        [
            pytest.param("1203", "0", 2, id="zero_digit"),
            pytest.param("12a", "a", 2, id="letter"),
            pytest.param("1.x.3", "x", 2, id="dotted_garbage"),
            pytest.param("1.0", "0", 2, id="dotted_zero"),
        ],
    )
    def test_invalid_names_token(self, text: str, token: str, position: int) -> None:
        with pytest.raises(WordParseError) as exc_info:
            parse_word(text)
        assert exc_info.value.token == token
        assert exc_info.value.position == position


class TestRenderWord:
    """Tests for render_word."""

    @pytest.mark.parametrize(
        ("word", "expected"),
        [
            pytest.param((), "", id="empty"),
            pytest.param((1, 2, 1), "121", id="digits"),
            pytest.param((1, 12), "1.12", id="dotted"),
            pytest.param((12,), "12.", id="dotted_single_letter"),
        ],
    )
    def test_render(self, word: tuple[int, ...], expected: str) -> None:
        assert render_word(word) == expected

    def test_dotted_text_parses_back(self) -> None:
        word = (10, 1, 11)
        assert parse_word(render_word(word)) == word


class TestBracketed:
    """Tests for the HEAD(TAIL) syntax."""

    @pytest.mark.parametrize(
        ("text", "head", "tail"),
        [
            pytest.param("123(1)", (1, 2, 3), (1,), id="head_and_tail"),
            pytest.param("(123)", (), (1, 2, 3), id="tail_only"),
            pytest.param("12131", (1, 2, 1, 3, 1), None, id="finite"),
            pytest.param("12()", (1, 2), (), id="empty_tail"),
        ],
    )
    def test_parse(
        self, text: str, head: tuple[int, ...], tail: tuple[int, ...] | None
    ) -> None:
        assert parse_bracketed(text) == (head, tail)

    @pytest.mark.parametrize(
        "text",
        [
            pytest.param("12(3", id="unclosed"),
            pytest.param("1(2)3", id="trailing_letters"),
            pytest.param("(1(2))", id="nested"),
        ],
    )
    def test_bad_brackets(self, text: str) -> None:
        with pytest.raises(WordParseError):
            parse_bracketed(text)

    def test_tail_error_position_is_absolute(self) -> None:
        with pytest.raises(WordParseError) as exc_info:
            parse_bracketed("12(3x)")
        assert exc_info.value.token == "x"
        assert exc_info.value.position == 4

    def test_render(self) -> None:
        assert render_bracketed((1, 2, 3), (1,)) == "123(1)"
        assert render_bracketed((1, 2), ()) == "12"
        assert render_bracketed((1,), (10,)) == "1.(10.)"
