#include "doctest.h"
#include "vvjack/compositions.hpp"
#include "vvjack/errors.hpp"
#include "vvjack/serialize.hpp"

using namespace vvjack;

TEST_CASE("scalar and matrix encodings") {
    CHECK(to_json(Rational(-3, 6)) == "-1/2");
    CHECK(to_json(Rational(4)) == "4");
    CHECK(rational_from_json(Json("7/21")) == Rational(1, 3));
    CHECK(rational_from_json(Json(5)) == Rational(5));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), FormatError);
    CHECK(to_json(ComplexScalar(1.0, -2.0)) == Json::array({1.0, -2.0}));
    const auto m = RationalMatrix::from_rows({{Rational(1, 2), Rational(0)}, {Rational(-1), Rational(3, 4)}});
    CHECK(to_json(m).dump() == R"([["1/2","0"],["-1","3/4"]])");
    CHECK(matrix_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1"],["1","2"]])")), FormatError);
    CHECK(to_json(Permutation::cycle(3)).dump() == "[2,3,1]");
}

TEST_CASE("tableaux and polynomials") {
    const Partition shape({2, 1});
    auto rep = Representation::of(shape);
    const Json b = basis_json(*rep);
    REQUIRE(b.size() == 2);
    CHECK(b[0].dump() == R"({"rows":[[3,1],[2]],"contents":[1,-1,0]})");
    VVLaurent f(rep, make_kappa(1, 4, shape));
    f.add_term({1, 0, 0}, {Rational(1), Rational(0)});
    f.add_term({0, 0, 1}, {Rational(1, 2), Rational(-1)});
    f.add_term({0, 1, 0}, {Rational(2), Rational(0)});
    CHECK(to_json(f).dump() ==
          R"([{"exponent":[0,0,1],"coeff":["1/2","-1"]},{"exponent":[0,1,0],"coeff":["2","0"]},)"
          R"({"exponent":[1,0,0],"coeff":["1","0"]}])");
}

TEST_CASE("coefficient store persistence round trip") {
    const Partition shape({2, 1});
    auto rep = Representation::of(shape);
    CoeffStore store(rep, make_kappa(1, 4, shape));
    store.ensure_grade(3);
    const Json j = store_json(store);
    CHECK(j["header"]["N"] == 3);
    CHECK(j["header"]["kappa"] == "1/4");
    CHECK(j["header"]["sealed_grade"] == 3);
    auto loaded = load_store(Json::parse(j.dump()));
    CHECK(loaded->sealed_grade() == 3);
    CHECK(store_json(*loaded).dump() == j.dump());
    for (const auto& g : enumerate_Z(3, 3)) CHECK(loaded->coeff(g) == store.coeff(g));
    // a loaded store extends exactly like a fresh one
    loaded->ensure_grade(4);
    store.ensure_grade(4);
    for (const auto& g : enumerate_Z(3, 4)) CHECK(loaded->coeff(g) == store.coeff(g));

    Json bad = j;
    bad["header"]["basis_order"][0] = std::vector<int>{0, 1, -1};
    CHECK_THROWS_AS(load_store(bad), FormatError);
    bad = j;
    bad["grades"][2]["records"].erase(0);
    CHECK_THROWS_AS(load_store(bad), FormatError);
    bad = j;
    bad["header"]["kappa"] = "1";
    CHECK_THROWS_AS(load_store(bad), PoleExcluded);
    CHECK_THROWS_AS(load_store(Json::parse("{}")), FormatError);
}
