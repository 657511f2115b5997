#include <doctest.h>

#include <string>

#include "genspin/pillow.hpp"

using namespace genspin;
using PA = PillowAtom;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("pillow transition probabilities") {
  for (PA f : kPillowVertices) {
    CHECK(pillow_tp(f, PA::E) == Rational(1, 3));
    CHECK(pillow_tp(f, PA::EPrime) == Rational(1, 3));
    CHECK(pillow_tp(PA::E, f) == Rational(1, 2));
    CHECK(pillow_tp(PA::EPrime, f) == Rational(1, 2));
  }
  CHECK(pillow_tp(PA::F1, PA::F2) == Rational(0));
  CHECK(pillow_tp(PA::E, PA::EPrime) == Rational(0));
  for (PA a : kPillowAtoms) CHECK(pillow_tp(a, a) == Rational(1));
  CHECK(pillow_orthocomplement_pole(PA::E) == PA::EPrime);
  CHECK(pillow_orthogonal(PA::F1, PA::F3));
  CHECK_FALSE(pillow_orthogonal(PA::F1, PA::E));
  CHECK(pillow_name(PA::EPrime) == "e'");
}

TEST_CASE("rows over orthogonal decompositions sum to one") {
  for (PA source : kPillowAtoms) {
    Rational by_vertices;
    for (PA f : kPillowVertices) by_vertices = by_vertices + pillow_tp(f, source);
    Rational by_poles;
    for (PA e : kPillowPoles) by_poles = by_poles + pillow_tp(e, source);
    CHECK(by_vertices == Rational(1));
    CHECK(by_poles == Rational(1));
  }
}

TEST_CASE("pillow report") {
  const PillowReport r = pillow_report();
  CHECK(r.sum_vertices_given_e == Rational(1));
  CHECK(r.sum_vertices_given_e_prime == Rational(1));
  CHECK(r.sum_e_given_vertices == Rational(3, 2));
  CHECK(r.sum_e_prime_given_vertices == Rational(3, 2));
  CHECK(r.vertex_eq6_sum == Rational(2, 3));
  CHECK(r.eq6_defect == Rational(1, 3));
  CHECK(r.eq6_violated);
  CHECK(r.total_by_vertices == Rational(3));
  CHECK(r.total_by_poles == Rational(2));
  CHECK(r.n == 3);
  CHECK(r.m == 2);
  CHECK_FALSE(r.symmetric);
  CHECK(r.rows_sum_to_one);

  const auto j = r.to_json();
  CHECK(j.dump().find("3 != 2") != std::string::npos);
  CHECK(r.to_text().find("3 != 2") != std::string::npos);
}
