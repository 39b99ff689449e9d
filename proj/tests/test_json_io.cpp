#include "doctest.h"
#include "liebider/graded_window.hpp"
#include "liebider/json_io.hpp"
#include "liebider/reproduce.hpp"

using namespace liebider;

namespace {

const Field Q = Field::rationals();

Json parse(const char* s) { return parse_json_text(s); }

}  // namespace

TEST_CASE("scalars and fields serialize canonically") {
  CHECK(scalar_to_json(Scalar::rational(6, -4)) == Json("-3/2"));
  CHECK(scalar_to_json(Scalar(7, Q)) == Json("7"));
  CHECK(scalar_to_json(Scalar(-1, Field::prime(5))) == Json(4));
  CHECK(scalar_from_json(Json("4/6"), Q) == Scalar::rational(2, 3));
  CHECK(scalar_from_json(Json(7), Field::prime(5)) == Scalar(2, Field::prime(5)));
  CHECK_THROWS_AS(scalar_from_json(Json(1.5), Q), JsonInputError);
  CHECK_THROWS_AS(scalar_from_json(Json("1/0"), Q), JsonInputError);
  CHECK(field_to_json(Field::prime(3)) == parse(R"({"Fp":3})"));
  CHECK_THROWS_AS(field_from_json(parse(R"({"Fp":2})")), JsonInputError);
  CHECK_THROWS_AS(field_from_json(parse(R"({"Fp":9})")), JsonInputError);
  CHECK_THROWS_AS(field_from_json(Json("R")), JsonInputError);
}

TEST_CASE("algebras round-trip") {
  for (const auto& [name, l] : structural_catalog()) {
    const Json j = algebra_to_json(l);
    const LieAlgebra back = algebra_from_json(j);
    CHECK(algebra_to_json(back) == j);
    CHECK(back.names() == l.names());
  }
  const LieAlgebra h5 = heisenberg(Field::prime(5));
  CHECK(algebra_from_json(algebra_to_json(h5)).field() == Field::prime(5));

  // partial, graded window algebra
  const auto w = instantiate(Family::Wab, FamilyParams{}, 3);
  const Json j = algebra_to_json(w.algebra);
  CHECK(j.contains("undefined"));
  CHECK(j.contains("degrees"));
  const LieAlgebra back = algebra_from_json(j);
  CHECK(back.is_partial());
  CHECK(back.undefined_pairs() == w.algebra.undefined_pairs());
  CHECK(algebra_to_json(back).dump() == j.dump());
}

TEST_CASE("modules round-trip") {
  const auto m = window_module(Scalar::rational(1, 2), Scalar(1, Q), 3);
  const Json j = module_to_json(m);
  CHECK(j.contains("undefined"));
  const LModule back = module_from_json(j);
  CHECK(back.undefined_pairs() == m.undefined_pairs());
  CHECK(module_to_json(back) == j);
  CHECK(check_module(back).empty());
}

TEST_CASE("loader rejects bad algebras") {
  auto bad = [](const char* text) { return algebra_from_json(parse(text)); };
  CHECK_THROWS_WITH_AS(bad(R"({"field":"Q","dim":2,"brackets":[{"i":1,"j":0,"coeffs":{}}]})"),
                       doctest::Contains("i < j"), JsonInputError);
  CHECK_THROWS_WITH_AS(bad(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":0,"coeffs":{}}]})"),
                       doctest::Contains("i < j"), JsonInputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":1,"coeffs":{}},{"i":0,"j":1,"coeffs":{"1":"1"}}]})"),
      doctest::Contains("duplicate"), JsonInputError);
  CHECK_THROWS_AS(bad(R"({"field":{"Fp":2},"dim":2})"), JsonInputError);
  CHECK_THROWS_AS(bad(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":1,"coeffs":{"2":"1"}}]})"), JsonInputError);
  CHECK_THROWS_AS(bad(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":1,"coeffs":{"x":"1"}}]})"), JsonInputError);
  CHECK_THROWS_AS(bad(R"({"field":"Q","dim":2,"basis":["a"]})"), JsonInputError);
  CHECK_THROWS_AS(bad(R"({"dim":2})"), JsonInputError);
  CHECK_THROWS_AS(bad(R"([1,2])"), JsonInputError);
  // unlisted brackets are zero
  const LieAlgebra a = bad(R"({"field":"Q","dim":2})");
  CHECK(a.bracket(0, 1).empty());
  CHECK(a.names() == std::vector<std::string>{"e1", "e2"});
}

TEST_CASE("malformed text reports line and column") {
  try {
    parse_json_text("{\"field\": \"Q\",\n  \"dim\": 3,,\n}");
    FAIL("no exception");
  } catch (const JsonInputError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 12);
  }
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), JsonInputError);
}

TEST_CASE("space reports are deterministic") {
  const LModule m = LModule::adjoint(std::make_shared<const LieAlgebra>(sl2()));
  const std::string a = space_to_json(skew_biderivations(m)).dump();
  const std::string b = space_to_json(skew_biderivations(m)).dump();
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["dim"] == 1);
  CHECK(j["symmetry"] == "skew");
  CHECK(j["coeffs"]["ambient"] == 9);
}

TEST_CASE("reproduce registry") {
  const auto names = registry_names();
  CHECK(names.size() == 14);
  CHECK(names.front() == "thm-2.3-sl2");
  CHECK(registry_criteria("example-2.11-obstruction") == std::vector<int>{6, 7});
  CHECK_THROWS_AS(reproduce("no-such-item"), Error);
  for (const auto& n : names) CHECK_FALSE(registry_criteria(n).empty());

  const auto r = reproduce("thm-2.3-sl2");
  CHECK(r.passed);
  CHECK(r.to_json()["item"] == "thm-2.3-sl2");
  ReproOptions zero;
  zero.b = Scalar(0, Q);
  CHECK(reproduce("example-2.11-obstruction", zero).details["lift"]["solvable"] == true);
}

TEST_CASE("current algebra shift family") {
  const auto fam = current_shift_family(2);
  CHECK(fam.size() == 4);
  const LModule m = LModule::adjoint(std::make_shared<const LieAlgebra>(current_algebra(sl2(), 2)));
  const auto cent = centroid(m);
  for (const auto& f : fam) CHECK(cent.contains(f));
  CHECK(fam.front() == LinearMap::identity(12, Q));
}
