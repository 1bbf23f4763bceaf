"""Byte strings <-> message blocks.

Layout of one block, big-endian: ``0x01 || chunk`` where each chunk is
``payload_bytes(m_bits)`` bytes of the message padded with ``0x80 0x00*``.
The leading 0x01 keeps leading zero bytes alive through the integer round
trip.
"""

from __future__ import annotations

SENTINEL = 0x01
PAD_MARK = 0x80


class PaddingError(ValueError):
    """A block stream did not have the expected sentinel/padding layout."""


def payload_bytes(m_bits: int) -> int:
    if m_bits < 16:
        raise ValueError("blocks narrower than 16 bits are not supported")
    return (m_bits - 8) // 8


def encode_blocks(data: bytes, m_bits: int) -> list[int]:
    size = payload_bytes(m_bits)
    padded = bytearray(data)
    padded.append(PAD_MARK)
    padded.extend(b"\x00" * (-len(padded) % size))
    return [
        int.from_bytes(bytes([SENTINEL]) + padded[i : i + size], "big")
        for i in range(0, len(padded), size)
    ]


def decode_blocks(blocks: list[int], m_bits: int) -> bytes:
    size = payload_bytes(m_bits)
    if not blocks:
        raise PaddingError("empty block stream")
    out = bytearray()
    for block in blocks:
        if not 0 <= block < 1 << (8 * size + 8):
            raise PaddingError("block out of range")
        raw = block.to_bytes(size + 1, "big")
        if raw[0] != SENTINEL:
            raise PaddingError("missing block sentinel")
        out += raw[1:]
    body = bytes(out).rstrip(b"\x00")
    if not body or body[-1] != PAD_MARK:
        raise PaddingError("malformed terminal padding")
    return body[:-1]
