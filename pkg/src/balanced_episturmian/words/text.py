"""Text codec for words, eventually periodic words and directive specs.

Words over letters 1..9 are digit strings (``1213121``); larger letters use
dot-separated decimals (``1.2.13.1``). ε is the empty string. Infinite words
and directive specs share the bracket syntax ``HEAD(PERIOD)``.
"""

import re

from balanced_episturmian.exceptions import WordParseError
from balanced_episturmian.words.basic import Word

_BRACKETED = re.compile(r"^(?P<head>[^()]*)(?:\((?P<tail>[^()]*)\))?$")


def parse_word(text: str) -> Word:
    """Parse a finite word; raises ``WordParseError`` naming the bad token."""
    text = text.strip()
    if not text:
        return ()
    if "." in text:
        tokens = text.split(".")
        # a single-letter dotted word is written with a trailing dot ("13.")
        if len(tokens) == 2 and tokens[1] == "":
            tokens.pop()
        letters: list[int] = []
        position = 0
        for token in tokens:
            if not token.isdigit() or int(token) < 1:
                raise WordParseError("Invalid letter", token, position)
            letters.append(int(token))
            position += len(token) + 1
        return tuple(letters)
    for position, char in enumerate(text):
        if char not in "123456789":
            raise WordParseError("Invalid letter", char, position)
    return tuple(int(char) for char in text)


def _render_dotted(word: Word) -> str:
    text = ".".join(str(letter) for letter in word)
    return f"{text}." if len(word) == 1 else text


def render_word(word: Word) -> str:
    if all(letter <= 9 for letter in word):
        return "".join(str(letter) for letter in word)
    return _render_dotted(word)


def parse_bracketed(text: str) -> tuple[Word, Word | None]:
    """Split ``HEAD(TAIL)`` into parsed parts; the tail is None without brackets."""
    text = text.strip()
    match = _BRACKETED.match(text)
    if match is None:
        position = next(
            (i for i, char in enumerate(text) if char in "()"), len(text)
        )
        token = text[position] if position < len(text) else text
        raise WordParseError("Unbalanced or misplaced bracket", token, position)
    head = parse_word(match["head"])
    tail = match["tail"]
    if tail is None:
        return head, None
    try:
        return head, parse_word(tail)
    except WordParseError as e:
        offset = len(match["head"]) + 1
        raise WordParseError("Invalid letter", e.token, e.position + offset) from e


def render_bracketed(head: Word, tail: Word) -> str:
    """Render ``HEAD(TAIL)``; a shared dotted style is used when any letter exceeds 9."""
    if not tail:
        return render_word(head)
    if all(letter <= 9 for letter in head + tail):
        return f"{render_word(head)}({render_word(tail)})"
    return f"{_render_dotted(head)}({_render_dotted(tail)})"
