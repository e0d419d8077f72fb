from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from specto.errors import InputError

from .const import FamilyTag


@dataclass(frozen=True)
class Substitution:
    """알파벳 {0, …, d−1} 위의 치환 ζ 입니다. rules[b] = ζ(b)."""

    alphabet_size: int
    rules: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, alphabet_size: int, rules: Iterable[Sequence[int] | str]) -> "Substitution":
        """
        규칙 목록으로부터 치환을 생성하고 검증합니다. d ≤ 10 이면 "0012" 같은 숫자 문자열도 허용합니다.
        """
        if alphabet_size < 2:
            raise InputError(f"alphabet size must be at least 2, got {alphabet_size}")
        parsed = []
        for b, rule in enumerate(rules):
            if isinstance(rule, str):
                if alphabet_size > 10:
                    raise InputError("digit-string rules are only accepted for alphabets of size at most 10")
                if not rule.isdigit():
                    raise InputError(f"rule {b} is not a digit string: {rule!r}")
                word = tuple(int(ch) for ch in rule)
            else:
                word = tuple(int(letter) for letter in rule)
            if not word:
                raise InputError(f"rule {b} is empty")
            if any(letter < 0 or letter >= alphabet_size for letter in word):
                raise InputError(f"rule {b} uses a letter outside 0..{alphabet_size - 1}")
            parsed.append(word)
        if len(parsed) != alphabet_size:
            raise InputError(f"expected {alphabet_size} rules, got {len(parsed)}")
        return cls(alphabet_size, tuple(parsed))

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(rule) for rule in self.rules)

    def to_json(self) -> dict:
        return {"alphabet_size": self.alphabet_size, "rules": [list(rule) for rule in self.rules]}

    def __str__(self) -> str:
        return ", ".join(f"{b}->{''.join(map(str, rule)) if self.alphabet_size <= 10 else list(rule)}" for b, rule in enumerate(self.rules))


@dataclass(frozen=True)
class FamilyParams:
    """내장 치환 족의 매개변수입니다. A, B는 zeta_mAB 족에서만 사용하는 0/1 단어입니다."""

    family: FamilyTag
    m: int
    A: str | None = None
    B: str | None = None

    @property
    def minority_count(self) -> int:
        """A, B 각각에서 덜 나타나는 문자 개수의 최댓값 k 입니다."""
        if self.A is None or self.B is None:
            raise InputError("minority count needs both words A and B")
        return max(min(word.count("0"), word.count("1")) for word in (self.A, self.B))

    def to_json(self) -> dict:
        data = {"family": self.family.value, "m": self.m}
        if self.family == FamilyTag.ZETA_MAB:
            data |= {"A": self.A, "B": self.B}
        return data
