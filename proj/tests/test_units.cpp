#include <doctest.h>

#include "oracle.hpp"
#include "sulva/interval.hpp"
#include "sulva/units.hpp"

using namespace sulva;

TEST_CASE("the shipped table carries the attested ratios") {
    UnitTable t = UnitTable::defaults();
    CHECK(t.find("angula").ratio_to_angula == Rational(1));
    CHECK(t.find("purusha").ratio_to_angula == Rational(120));
    CHECK(t.find("vitasti").ratio_to_angula == Rational(12));
    CHECK(t.find("pada").ratio_to_angula == Rational(12));
    CHECK(t.find("pradesha").ratio_to_angula == Rational(12));
    CHECK(t.find("isha").ratio_to_angula == Rational(188));
    CHECK(t.find("bahu").ratio_to_angula == Rational(36));
    CHECK(t.find("yuga").ratio_to_angula == Rational(86));
    CHECK(t.find("tila").ratio_to_angula == Rational(1, 34));
    CHECK(t.find("purusha").ratio_to_angula / t.find("vitasti").ratio_to_angula == Rational(10));
}

TEST_CASE("conversions are exact and match the recorded equivalences") {
    UnitTable t = UnitTable::defaults();
    auto as_rational = [&](const LengthQuantity& q) { return *q.magnitude.rational_value(); };

    LengthQuantity purusha{Scalar(1), "puruṣa"};
    CHECK(as_rational(t.convert(purusha, "angula")) == Rational(120));

    LengthQuantity angula{Scalar(1), "aṅgula"};
    CHECK(as_rational(t.convert(angula, "tila")) == Rational(34));

    LengthQuantity twelve{Scalar(12), "aṅgula"};
    CHECK(as_rational(t.convert(twelve, "vitasti")) == Rational(1));
    CHECK(as_rational(t.convert(twelve, "pada")) == Rational(1));

    CHECK_THROWS_AS(t.convert(angula, "cubit"), Error);
    CHECK_THROWS_AS(t.find("anu"), Error); // no ratio is recorded for it
}

TEST_CASE("round trips through any unit are the identity") {
    UnitTable t = UnitTable::defaults();
    auto gen = oracle::rng(5);
    const char* names[] = {"aṅgula", "tila", "vitasti", "pada", "bāhu", "yuga", "puruṣa", "īṣā"};
    for (int i = 0; i < 50; ++i) {
        Rational m = oracle::random_positive_rational(gen, 50);
        const char* from = names[i % 8];
        const char* via = names[(i * 3 + 1) % 8];
        LengthQuantity start{Scalar(m), from};
        LengthQuantity back = t.convert(t.convert(start, via), from);
        CHECK(*back.magnitude.rational_value() == m);
    }
}

TEST_CASE("katyayana's tags exclude the fine units") {
    UnitTable t = UnitTable::defaults();
    for (const auto& unit : t.units()) {
        if (unit.attested_in.count(TextTag::Katyayana)) {
            CHECK(unit.name != "tila");
            CHECK(unit.name != "aṇu");
        }
    }
    CHECK(!t.find("tila").attested_in.count(TextTag::Katyayana));
    CHECK(t.find("vitasti").attested_in.count(TextTag::Katyayana));
}

TEST_CASE("unit tables load from JSON") {
    UnitTable t = UnitTable::from_json(R"([
        {"name": "hasta", "ratio_to_angula": "24", "attested_in": ["baudhayana"],
         "aliases": ["cubit"]},
        {"name": "krama", "ratio_to_angula": "60/2"}
    ])");
    CHECK(t.find("cubit").ratio_to_angula == Rational(24));
    CHECK(t.find("krama").ratio_to_angula == Rational(30));
    CHECK(t.find("hasta").attested_in.count(TextTag::Baudhayana) == 1);
    CHECK_THROWS_AS(UnitTable::from_json(R"([{"name": "x", "ratio_to_angula": "0"}])"), Error);
    CHECK_THROWS_AS(UnitTable::from_json(R"({"not": "an array"})"), Error);
}
