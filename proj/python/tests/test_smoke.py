import braidcong


def test_congruence_example():
    reports = braidcong.classify(["0/1", "1/2"])
    assert len(reports) == 1
    r = reports[0]
    assert r["verdict"]["type"] == "Congruence"
    assert r["verdict"]["level"] == 2
    assert r["theta"] == "0/1"
    assert r["po"] == 2


def test_rescaled_congruence_example():
    r = braidcong.classify(["1/4", "3/4"])[0]
    assert r["theta"] == "1/12"
    assert r["spectrum"] == ["1/3", "5/6"]
    assert r["verdict"]["level"] == 6


def test_noncongruence_spectrum():
    r = braidcong.classify(["1/9", "11/18", "5/18"])[0]
    assert r["verdict"]["type"] == "NonCongruence"
    assert r["glevel"] == 18
    assert r["verdict"]["witness"]["name"] == "[x,w]"


def test_not_applicable_spectrum():
    r = braidcong.classify(["1/7", "2/7"])[0]
    assert r["verdict"]["type"] == "NotApplicable"


def test_catalog_counts():
    cases = braidcong.catalog()
    assert len(cases) == 102
    assert sum(1 for c in cases if c["dim"] == 2) == 54
    by_name = {c["name"]: c for c in cases}
    assert by_name["A2:r4j1:λ=7/24"]["expected_level"] == 24


def test_hsu_words_and_oracle():
    words = braidcong.hsu_words(12)
    assert len(words) == 8
    assert words[0][0] == "T^12"
    assert braidcong.hsu_oracle(2, 40)


def test_image_order():
    order = braidcong.image_order(["1/4", "3/4"])
    assert order > 0
    assert order % 6 == 0
