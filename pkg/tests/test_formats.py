import pytest

from aabeta import fixtures
from aabeta.cipher import Ciphertext
from aabeta.formats import (
    FormatError,
    dump_ciphertexts,
    dump_private,
    dump_public,
    load_ciphertexts,
    load_private,
    load_public,
)


def test_public_exact_text(reference_kp):
    text = dump_public(reference_kp.public)
    assert text == (
        "AABETA PUBLIC v1\nn = 32\n"
        "e1 = 12287919017871704653\ne2 = 11257420096542527645\n"
    )
    assert load_public(text) == (reference_kp.public, "strict")


def test_toy_watermark(reference_kp):
    text = dump_private(reference_kp)
    assert text.splitlines()[-1] == "mode = toy"
    priv, secrets, mode = load_private(text)
    assert priv == reference_kp.private and secrets == reference_kp.secrets and mode == "toy"
    assert load_public(dump_public(reference_kp.public, "toy"))[1] == "toy"


def test_private_without_secrets(reference_kp):
    text = dump_private(reference_kp, include_secrets=False)
    assert "a1" not in text
    assert load_private(text)[1] is None


def test_whitespace_tolerant():
    text = "AABETA PUBLIC v1\n  n=32\ne1   =  5\ne2=7  \n\n"
    pub, _ = load_public(text)
    assert (pub.n, pub.e1, pub.e2) == (32, 5, 7)


@pytest.mark.parametrize(
    "text",
    [
        "AABETA PUBLIC v2\nn = 1\ne1 = 1\ne2 = 1\n",
        "AABETA PUBLIC v1\nn = 1\ne1 = 1\n",
        "AABETA PUBLIC v1\nn = 1\ne1 = 1\ne2 = 1\ne3 = 1\n",
        "AABETA PUBLIC v1\nn = 1\ne1 = 0x10\ne2 = 1\n",
        "AABETA PUBLIC v1\nn = 1\ne1 = 1\ne1 = 2\ne2 = 1\n",
        "AABETA PUBLIC v1\nn 1\n",
        "AABETA PUBLIC v1\nn = 1\ne1 = 1\ne2 = 1\nmode = lax\n",
        "",
    ],
)
def test_public_rejects(text):
    with pytest.raises(FormatError):
        load_public(text)


def test_private_partial_secrets_rejected():
    with pytest.raises(FormatError):
        load_private("AABETA PRIVATE v1\nn = 32\np = 3\nv = 1\na1 = 4\n")


def test_ciphertext_round_trip():
    cts = [Ciphertext(fixtures.C, 32), Ciphertext(17, 32)]
    text = dump_ciphertexts(cts)
    assert text == "AABETA CT v1\nn = 32\nblocks = 2\nc = 765738770679166291180\nc = 17\n"
    assert load_ciphertexts(text) == cts


def test_ciphertext_count_mismatch():
    with pytest.raises(FormatError):
        load_ciphertexts("AABETA CT v1\nn = 32\nblocks = 3\nc = 1\n")
    with pytest.raises(FormatError):
        dump_ciphertexts([Ciphertext(1, 32), Ciphertext(1, 64)])
    with pytest.raises(FormatError):
        dump_ciphertexts([])
