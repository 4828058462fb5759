from typing import Union

from chardet import UniversalDetector

_KNOWN_ENCODINGS = {"ascii", "utf-8", "utf-8-sig", "utf-16", "utf-32", "iso-8859-1", "windows-1252"}


def detect_encoding(data: bytes) -> str:
    """ Best guess at the text encoding of `data`, utf-8 when unsure """
    if data.startswith(b"\xef\xbb\xbf"):
        return "utf-8-sig"

    encoder = UniversalDetector()
    encoder.feed(data)
    encoding = encoder.close()["encoding"]

    if not encoding or encoding.lower() not in _KNOWN_ENCODINGS:
        return "utf-8"
    return encoding.lower()


def decode_input(data: Union[bytes, str]) -> str:
    if isinstance(data, str):
        return data

    try:
        return data.decode(detect_encoding(data))
    except UnicodeDecodeError:
        return data.decode("utf-8", errors="replace")
