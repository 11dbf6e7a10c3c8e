#include <doctest.h>

#include <etalift/json_io.hpp>
#include <etalift/series.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

using namespace etalift;

TEST_SUITE("json") {
  TEST_CASE("fractional series round trip, including big values") {
    mpq_class big("123456789012345678901234567891/7");
    big.canonicalize();
    FracSeries f(24, -7, {1, 0, big, mpq_class(-5, 3)});
    FracSeries g = frac_series_from_json(series_to_json(f));
    CHECK(g.denom() == 24);
    CHECK(g.val() == -7);
    REQUIRE(g.prec() == f.prec());
    for (size_t i = 0; i < f.prec(); ++i) CHECK(f[i] == g[i]);
  }

  TEST_CASE("sparse series travel compactly via the stride field") {
    std::vector<mpq_class> c(49);
    c[0] = 2;
    c[24] = -3;
    c[48] = 7;
    FracSeries f(24, 5, std::move(c));
    std::string text = series_to_json(f);
    CHECK(text.find("\"stride\":24") != std::string::npos);
    CHECK(text.find("\"-3\"") != std::string::npos);
    FracSeries g = frac_series_from_json(text);
    CHECK(g.prec() == 49);
    CHECK(g.at_num(5) == 2);
    CHECK(g.at_num(29) == -3);
    CHECK(g.at_num(53) == 7);
    CHECK(g.at_num(30) == 0);
  }

  TEST_CASE("dense series with no shared stride stay dense") {
    FracSeries f(1, 0, {1, 2, 3});
    std::string text = series_to_json(f);
    CHECK(text.find("stride") == std::string::npos);
    FracSeries g = frac_series_from_json(text);
    CHECK(g[1] == 2);
  }

  TEST_CASE("integer literals in coeffs are accepted") {
    FracSeries f = frac_series_from_json(
        R"({"coeffs":[1,-5,5],"denom":24,"valuation":5})");
    CHECK(f.at_num(5) == 1);
    CHECK(f.at_num(6) == -5);
  }

  TEST_CASE("modular series round trip") {
    ModSeries m(13, 8, 3, {1, 0, 12, 5});
    ModSeries g = mod_series_from_json(series_to_json(m));
    CHECK(g.modulus() == 13);
    CHECK(g.denom() == 8);
    CHECK(g.val() == 3);
    REQUIRE(g.prec() == 4);
    for (size_t i = 0; i < 4; ++i) CHECK(g[i] == m[i]);
  }

  TEST_CASE("malformed input is rejected") {
    CHECK_THROWS(frac_series_from_json("not json"));
    CHECK_THROWS(frac_series_from_json(R"({"denom":1})"));
    CHECK_THROWS(frac_series_from_json(R"({"coeffs":["abc"],"denom":1})"));
    CHECK_THROWS(mod_series_from_json(R"({"coeffs":[1],"denom":1})"));
  }

  TEST_CASE("character strings round trip") {
    for (const std::string& s :
         {"1", "principal:6", "jacobi:7", "kron:12", "kron:-4"}) {
      RealCharacter chi = character_from_string(s);
      RealCharacter back = character_from_string(character_to_string(chi));
      for (long long n = 1; n <= 100; ++n) CHECK(chi(n) == back(n));
    }
    CHECK_THROWS(character_from_string("weird:3"));
  }

  TEST_CASE("space descriptors round trip") {
    HalfIntegralMeta m{2, 7, 15, RealCharacter::principal(7)};
    HalfIntegralMeta g = meta_from_json(meta_to_json(m));
    CHECK(g.lambda == 2);
    CHECK(g.level == 7);
    CHECK(g.r == 15);
    for (long long n = 1; n <= 30; ++n) CHECK(g.psi(n) == m.psi(n));
    CHECK_THROWS(meta_from_json(R"({"lambda":1})"));
  }
}
