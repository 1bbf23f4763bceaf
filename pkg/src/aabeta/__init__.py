"""AA_beta public-key encryption and a workbench of attacks against it."""

from .cipher import Ciphertext, SessionKeys, decrypt, encrypt, encrypt_with_keys
from .codec import PaddingError, decode_blocks, encode_blocks
from .keygen import (
    EphemeralSecrets,
    KeyPair,
    PrivateKey,
    PublicKey,
    SizeProfile,
    build_keypair,
    derive_size_profile,
    keygen,
    reconstruct_from_factors,
    recover_factors,
    validate_keypair,
)
from .numeric import RandomSource

__version__ = "0.1.0"

__all__ = [
    "Ciphertext",
    "EphemeralSecrets",
    "KeyPair",
    "PaddingError",
    "PrivateKey",
    "PublicKey",
    "RandomSource",
    "SessionKeys",
    "SizeProfile",
    "build_keypair",
    "decode_blocks",
    "decrypt",
    "derive_size_profile",
    "encode_blocks",
    "encrypt",
    "encrypt_with_keys",
    "keygen",
    "reconstruct_from_factors",
    "recover_factors",
    "validate_keypair",
]
