"""The n = 32 reference instance, used by the demo, the CLI and the tests."""

N = 32
P = 3471523427
Q = 3539633039
V = 66857602
A1 = 6143959510671614040
A2 = 6143959507200090613
A3 = 5113460585870913605
E1 = 12287919017871704653
E2 = 11257420096542527645
K1 = 33
K2 = 32
M = 39152991
C = 765738770679166291180
C_MOD_P = 2178596255


def reference_keypair():
    from .keygen import TOY, build_keypair

    return build_keypair(P, Q, V, A3, n=N, mode=TOY)
