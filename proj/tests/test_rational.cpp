#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pricing/errors.hpp"
#include "pricing/price.hpp"
#include "pricing/rational.hpp"

using namespace pricing;

TEST_CASE("parsing accepts integers, fractions and decimals") {
  CHECK(rat_parse("17") == Rat(17));
  CHECK(rat_parse("-3") == Rat(-3));
  CHECK(rat_parse("3/2") == Rat(3, 2));
  CHECK(rat_parse("25/16") == Rat(25, 16));
  CHECK(rat_parse("1.5") == Rat(3, 2));
  CHECK(rat_parse("0.25") == Rat(1, 4));
  CHECK(rat_parse("-0.5") == Rat(-1, 2));
  CHECK(rat_parse(" 2/4 ") == Rat(1, 2));  // canonicalized
  CHECK(rat_parse("2/4").get_den() == 2);
}

TEST_CASE("parsing rejects junk") {
  CHECK_THROWS_AS(rat_parse(""), Error);
  CHECK_THROWS_AS(rat_parse("abc"), Error);
  CHECK_THROWS_AS(rat_parse("1/0"), Error);
  CHECK_THROWS_AS(rat_parse("1.5.2"), Error);
  CHECK_THROWS_AS(rat_parse("1/2/3"), Error);
}

TEST_CASE("formatting is canonical") {
  CHECK(rat_str(Rat(17)) == "17");
  CHECK(rat_str(Rat(3, 2)) == "3/2");
  CHECK(rat_str(Rat(-1, 4)) == "-1/4");
  CHECK(rat_str(rat_parse(rat_str(Rat(761, 280)))) == "761/280");
}

TEST_CASE("harmonic numbers are exact") {
  CHECK(harmonic_number(1) == Rat(1));
  CHECK(harmonic_number(4) == Rat(25, 12));
  CHECK(harmonic_number(8) == Rat(761, 280));
  CHECK(harmonic_number(16) == Rat(2436559, 720720));
}

TEST_CASE("skip compares above every finite price") {
  Price skip = Price::skip();
  Price low = Price::finite(Rat(0));
  Price high = Price::finite(Rat(1000000));
  CHECK(low < skip);
  CHECK(high < skip);
  CHECK(!(skip < skip));
  CHECK(skip == Price::skip());
  CHECK(low < high);
  CHECK(Price::finite(Rat(3, 2)) == Price::finite(Rat(3, 2)));
  CHECK(skip.str() == "skip");
}
