from typing import Union

JSON_SAFE_INT = 2 ** 53 - 1


class IntCodec:

    @staticmethod
    def encode(value: int) -> Union[int, str]:
        # beyond the 53-bit range a JSON number may be rounded by the reader
        if -JSON_SAFE_INT <= value <= JSON_SAFE_INT:
            return value
        return str(value)

    @staticmethod
    def decode(value: Union[int, str]) -> int:
        if isinstance(value, bool):
            raise ValueError("booleans are not integers here")
        if isinstance(value, int):
            return value
        if isinstance(value, str):
            text = value.strip()
            if text.lstrip("+-").isdigit():
                return int(text)
        raise ValueError(f"{value!r} is not an integer or a decimal integer string")
