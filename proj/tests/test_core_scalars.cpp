#include <doctest.h>

#include <random>

#include "wakimoto/chi_series.hpp"
#include "wakimoto/errors.hpp"
#include "wakimoto/rational.hpp"

using namespace wakimoto;

TEST_SUITE("core_scalars") {
  TEST_CASE("rationals are canonical and exact") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
    CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(4, 2).is_integer());
    CHECK(factorial(6) == Rational(720));
  }

  TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1, 0), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  }

  TEST_CASE("big values stay exact") {
    Rational r = factorial(40) / factorial(38);
    CHECK(r == Rational(40 * 39));
    Rational tiny(1);
    for (int i = 0; i < 30; ++i) tiny /= Rational(1000);
    CHECK(tiny * factorial(1) * Rational::parse("1" + std::string(90, '0')) == Rational(1));
  }

  TEST_CASE("string round trip and field laws on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 99999);
    for (int i = 0; i < 500; ++i) {
      const Rational a(num(rng), den(rng));
      const Rational b(num(rng), den(rng));
      const Rational c(num(rng), den(rng));
      CHECK(Rational::parse(a.to_string()) == a);
      CHECK((a + b) - b == a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }

  TEST_CASE("pole order") {
    CHECK(pole_order(ChiSeries({{3, Rational(3)}, {0, Rational(1)}})) == 3);
    CHECK(pole_order(ChiSeries()) == 0);
    CHECK(pole_order(ChiSeries({{0, Rational(2)}})) == 0);
    CHECK(pole_order(ChiSeries({{-4, Rational(2)}})) == 0);
  }

  TEST_CASE("ell") {
    CHECK(ell_of(ChiSeries::with_residue(Rational(2), {{1, Rational(9)}})) == 1);
    CHECK_FALSE(ell_of(ChiSeries({{0, Rational(1, 2)}})).has_value());
    CHECK_FALSE(ell_of(ChiSeries({{1, Rational(1)}, {0, Rational(2)}})).has_value());
    CHECK(ell_of(ChiSeries()) == -1);
    CHECK(ell_of(ChiSeries({{0, Rational(-3)}})) == -4);
  }

  TEST_CASE("coefficient lookup drops zeros") {
    const ChiSeries chi({{0, Rational(0)}, {-1, Rational(5)}});
    CHECK(chi.coeffs().size() == 1);
    CHECK(chi.coeff(0).is_zero());
    CHECK(chi.coeff(-1) == Rational(5));
    CHECK(chi.coeff(123).is_zero());
    CHECK(chi.with(-1, Rational(0)).empty());
  }

  TEST_CASE("parse chi") {
    const ChiSeries a = parse_chi(R"({"coeffs":[{"m":0,"value":"2"}]})");
    CHECK(a == ChiSeries({{0, Rational(2)}}));
    const ChiSeries b = parse_chi(R"({"coeffs":[{"m":-1,"value":"-3/7"}]})");
    CHECK(b.coeff(-1) == Rational(-3, 7));
    const ChiSeries c = parse_chi(R"({"coeffs":[{"m":0,"value":"0"},{"m":2,"value":"4/2"}]})");
    CHECK(c == ChiSeries({{2, Rational(2)}}));
    CHECK(parse_chi(chi_to_json(b)) == b);
  }

  TEST_CASE("parse errors name the field") {
    auto message = [](const char* text) {
      try {
        parse_chi(text);
      } catch (const ParseError& e) {
        return std::string(e.what());
      }
      return std::string("no error");
    };
    CHECK(message(R"({"coeffs":[{"m":0,"value":"1/0"}]})").find("zero denominator") != std::string::npos);
    CHECK(message(R"({"coeffs":[{"m":0,"value":"1/0"}]})").find("coeffs[0].value") != std::string::npos);
    CHECK(message(R"({"coeffs":[{"m":1,"value":"1"},{"m":1,"value":"2"}]})").find("duplicate") !=
          std::string::npos);
    CHECK(message(R"({"coeffs":[{"m":0,"value":"1"}]}x)").find("malformed JSON") != std::string::npos);
    CHECK(message(R"({"coeffs":[{"m":"0","value":"1"}]})").find("coeffs[0].m") != std::string::npos);
    CHECK(message(R"({"coeffs":[{"m":0,"value":2}]})").find("coeffs[0].value") != std::string::npos);
    CHECK(message(R"({"nope":[]})").find("coeffs") != std::string::npos);
  }
}
