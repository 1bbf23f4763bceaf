"""Line-oriented decimal text formats for keys and ciphertexts.

    AABETA PUBLIC v1        AABETA PRIVATE v1       AABETA CT v1
    n = <dec>               n = <dec>               n = <dec>
    e1 = <dec>              p = <dec>               blocks = <dec>
    e2 = <dec>              v = <dec>               c = <dec>   (one per block)
                            [a1|a2|a3 = <dec>]

Key files may also carry ``mode = toy``; insecure toy keys are watermarked so
they are not mistaken for real ones.
"""

from __future__ import annotations

from .cipher import Ciphertext
from .keygen import STRICT, TOY, EphemeralSecrets, KeyPair, PrivateKey, PublicKey

PUBLIC_HEADER = "AABETA PUBLIC v1"
PRIVATE_HEADER = "AABETA PRIVATE v1"
CT_HEADER = "AABETA CT v1"


class FormatError(ValueError):
    pass


def _parse(text: str, header: str, allowed: set[str], repeated: str = "") -> tuple[dict, list[int]]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != header:
        raise FormatError(f"expected header {header!r}")
    fields: dict[str, str] = {}
    multi: list[int] = []
    for ln in lines[1:]:
        key, sep, value = (s.strip() for s in ln.partition("="))
        if not sep:
            raise FormatError(f"not a key = value line: {ln!r}")
        if key not in allowed and key != repeated:
            raise FormatError(f"unknown key {key!r}")
        if key == "mode":
            if value not in (STRICT, TOY):
                raise FormatError(f"bad mode {value!r}")
            fields[key] = value
            continue
        try:
            number = int(value, 10)
        except ValueError:
            raise FormatError(f"{key} is not a decimal integer") from None
        if key == repeated:
            multi.append(number)
        elif key in fields:
            raise FormatError(f"duplicate key {key!r}")
        else:
            fields[key] = number
    return fields, multi


def _require(fields: dict, *names: str) -> None:
    missing = [n for n in names if n not in fields]
    if missing:
        raise FormatError(f"missing keys: {', '.join(missing)}")


def dump_public(pub: PublicKey, mode: str = STRICT) -> str:
    lines = [PUBLIC_HEADER, f"n = {pub.n}", f"e1 = {pub.e1}", f"e2 = {pub.e2}"]
    if mode == TOY:
        lines.append("mode = toy")
    return "\n".join(lines) + "\n"


def load_public(text: str) -> tuple[PublicKey, str]:
    fields, _ = _parse(text, PUBLIC_HEADER, {"n", "e1", "e2", "mode"})
    _require(fields, "n", "e1", "e2")
    return PublicKey(e1=fields["e1"], e2=fields["e2"], n=fields["n"]), fields.get("mode", STRICT)


def dump_private(kp: KeyPair, include_secrets: bool = True) -> str:
    priv = kp.private
    lines = [PRIVATE_HEADER, f"n = {priv.n}", f"p = {priv.p}", f"v = {priv.v}"]
    if include_secrets and kp.secrets is not None:
        s = kp.secrets
        lines += [f"a1 = {s.a1}", f"a2 = {s.a2}", f"a3 = {s.a3}"]
    if kp.mode == TOY:
        lines.append("mode = toy")
    return "\n".join(lines) + "\n"


def load_private(text: str) -> tuple[PrivateKey, EphemeralSecrets | None, str]:
    fields, _ = _parse(text, PRIVATE_HEADER, {"n", "p", "v", "a1", "a2", "a3", "mode"})
    _require(fields, "n", "p", "v")
    secrets = None
    present = [k for k in ("a1", "a2", "a3") if k in fields]
    if present:
        _require(fields, "a1", "a2", "a3")
        secrets = EphemeralSecrets(fields["a1"], fields["a2"], fields["a3"])
    priv = PrivateKey(p=fields["p"], v=fields["v"], n=fields["n"])
    return priv, secrets, fields.get("mode", STRICT)


def dump_ciphertexts(cts: list[Ciphertext]) -> str:
    if not cts:
        raise FormatError("no blocks to write")
    n = cts[0].n
    if any(ct.n != n for ct in cts):
        raise FormatError("blocks from different key sizes")
    lines = [CT_HEADER, f"n = {n}", f"blocks = {len(cts)}"]
    lines += [f"c = {ct.c}" for ct in cts]
    return "\n".join(lines) + "\n"


def load_ciphertexts(text: str) -> list[Ciphertext]:
    fields, values = _parse(text, CT_HEADER, {"n", "blocks"}, repeated="c")
    _require(fields, "n", "blocks")
    if fields["blocks"] != len(values):
        raise FormatError(f"header says {fields['blocks']} blocks, found {len(values)}")
    return [Ciphertext(c=c, n=fields["n"]) for c in values]
