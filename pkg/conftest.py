import pytest

# (p, q, L(p,q), L(q,p)) for all primes p < q <= 500 with gcd(p-1, q-1) = 8.
FINAL_TABLE = [
    (17, 41, 696, 696), (17, 73, 1204, 916), (17, 89, 1468, 764), (17, 137, 2328, 2328),
    (17, 233, 3844, 2916), (17, 281, 4776, 2536), (17, 313, 5320, 5320), (17, 409, 6952, 6952),
    (17, 457, 7768, 7768),
    (41, 73, 2956, 2956), (41, 89, 3604, 2724), (41, 97, 3976, 3976), (41, 113, 4632, 4632),
    (41, 137, 5616, 5616), (41, 193, 7912, 7912), (41, 233, 9436, 7116), (41, 257, 10408, 7848),
    (41, 313, 12832, 12832), (41, 337, 13648, 13648), (41, 353, 14472, 14472),
    (41, 409, 16768, 16768), (41, 433, 17752, 17752), (41, 449, 18408, 18408),
    (41, 457, 18736, 18736),
    (73, 89, 3248, 3248), (73, 113, 4180, 8212), (73, 137, 5068, 9964), (73, 233, 8504, 8504),
    (73, 257, 9380, 9380), (73, 281, 10396, 20476), (73, 353, 13060, 25732),
    (73, 401, 29236, 29236), (73, 449, 24676, 32740),
    (89, 97, 8588, 8588), (89, 113, 5084, 10012), (89, 137, 9156, 12148), (89, 193, 12908, 17132),
    (89, 233, 10368, 10368), (89, 241, 16124, 21404), (89, 257, 11436, 11436),
    (89, 281, 12644, 24964), (89, 313, 20948, 27812), (89, 337, 14996, 14996),
    (89, 401, 35644, 35644), (89, 409, 18404, 36356), (89, 433, 28988, 38492),
    (89, 449, 20204, 39916), (89, 457, 30596, 40628),
    (97, 137, 13288, 13288), (97, 233, 22484, 16916), (97, 281, 27256, 20536),
    (113, 137, 11672, 15480), (113, 233, 26212, 13220), (113, 313, 35368, 35368),
    (113, 409, 34792, 46216), (113, 457, 38872, 51640),
    (137, 193, 26440, 26440), (137, 233, 31804, 23916), (137, 241, 33016, 33016),
    (137, 257, 35080, 35080), (137, 281, 38496, 19456), (137, 313, 42880, 42880),
    (137, 337, 46000, 23152), (137, 353, 48360, 36392), (137, 401, 54936, 54936),
    (137, 433, 59320, 59320), (137, 449, 61512, 61512), (137, 457, 62608, 62608),
    (193, 233, 44852, 33716), (193, 281, 54232, 40792),
    (233, 241, 56036, 56036), (233, 257, 29940, 29940), (233, 281, 32876, 65356),
    (233, 313, 54716, 72812), (233, 337, 39260, 39260), (233, 353, 41300, 82132),
    (233, 401, 70116, 93316), (233, 409, 71516, 95180), (233, 433, 50660, 100772),
    (233, 449, 78516, 104500), (233, 457, 106364, 106364),
    (257, 281, 36248, 72088), (257, 313, 60344, 80312), (257, 409, 78872, 104984),
    (257, 457, 58952, 117320),
    (281, 313, 44272, 87952), (281, 353, 99192, 99192), (281, 409, 57808, 114928),
    (281, 433, 91432, 121672), (281, 457, 96496, 128416),
    (313, 353, 110488, 83032), (313, 401, 125512, 125512), (313, 449, 140536, 140536),
    (353, 409, 108472, 144376), (353, 457, 121192, 161320),
    (401, 409, 164008, 164008), (401, 457, 183256, 183256), (409, 449, 183640, 183640),
    (449, 457, 205192, 205192),
]

# (Res(2,p), Res(2,q)) -> example pairs for Res(p,q) = 1, 2, 4, 8.
CLASSIFICATION_EXAMPLES = {
    (2, 2): [(17, 41), (17, 137), (17, 457), (17, 409)],
    (2, 4): [(17, 617), (17, 281), (17, 1481), (41, 2273)],
    (2, 8): [(17, 73), (17, 89), (41, 73), (17, 1721)],
    (4, 2): [(113, 137), (113, 521), (113, 41), (113, 313)],
    (4, 4): [(113, 1097), (113, 1049), (113, 2473), (113, 1033)],
    (4, 8): [(113, 73), (113, 233), (113, 1801), (113, 1721)],
    (8, 2): [(73, 17), (73, 41), (73, 809), (73, 137)],
    (8, 4): [(73, 113), (73, 593), (73, 353), (73, 1889)],
    (8, 8): [(73, 233), (73, 1217), (73, 89), (73, 2969)],
}

# Order-8 pairs with both primes below 200.
SMALL_PAIRS = [
    (17, 41), (17, 73), (17, 89), (17, 137), (41, 73), (41, 89), (41, 97), (41, 113),
    (41, 137), (41, 193), (73, 89), (73, 113), (73, 137), (89, 97), (89, 113), (89, 137),
    (89, 193), (97, 137), (113, 137), (137, 193),
]


@pytest.fixture
def final_table():
    return list(FINAL_TABLE)


@pytest.fixture
def classification_examples():
    return dict(CLASSIFICATION_EXAMPLES)
