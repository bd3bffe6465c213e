#include <doctest.h>

#include <charconv>
#include <sstream>

#include "tlrep/errors.hpp"
#include "tlrep/fibonacci.hpp"
#include "tlrep/io.hpp"

using namespace tlrep;

namespace {
int error_token(const std::string& text, int n) {
  try {
    io::parse_braid_word(text, n);
  } catch (const ParseError& e) {
    return e.token();
  }
  return -1;
}
}  // namespace

TEST_CASE("braid word parsing") {
  CHECK(io::parse_braid_word("1 -2 1", 3).letters() == std::vector<int>{1, -2, 1});
  CHECK(io::parse_braid_word("", 3).empty());
  CHECK(io::parse_braid_word("  \t\n", 3).empty());
  CHECK(io::parse_braid_word("+2\t-1\n", 3).letters() == std::vector<int>{2, -1});
  CHECK(error_token("3", 3) == 1);
  CHECK(error_token("1 -3", 3) == 2);
  CHECK(error_token("1 0", 3) == 2);
  CHECK(error_token("1 2 x", 3) == 3);
  CHECK(error_token("1.5", 3) == 1);
  CHECK(error_token("--1", 3) == 1);
  CHECK(error_token("+-1", 3) == 1);
  CHECK_THROWS_AS(io::parse_braid_word("1", 1), ParseError);
}

TEST_CASE("label and grid parsing") {
  const io::LabelSpec s = io::parse_labels("1, 2,3:0");
  CHECK(s.inputs == std::vector<int>{1, 2, 3});
  CHECK(s.output == 0);
  CHECK_THROWS_AS(io::parse_labels("1,2"), ParseError);
  CHECK_THROWS_AS(io::parse_labels("1,,2:0"), ParseError);
  CHECK_THROWS_AS(io::parse_labels("1,-2:0"), ParseError);
  CHECK_THROWS_AS(io::parse_labels("1,2:0:1"), ParseError);
  const io::GridSpec g = io::parse_grid("3..6");
  CHECK(g.r_min == 3);
  CHECK(g.r_max == 6);
  CHECK(io::parse_grid("5").r_max == 5);
  CHECK_THROWS_AS(io::parse_grid("6..3"), ParseError);
  CHECK_THROWS_AS(io::parse_grid("2..4"), ParseError);
  CHECK_THROWS_AS(io::parse_grid("a..4"), ParseError);
}

TEST_CASE("real formatting round-trips") {
  for (double x : {0.0, 1.0, -0.61803398874989479, 1e-300, 6.02214076e23, 0.1}) {
    const std::string s = io::format_real(x);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == x);
    CHECK(s.find(',') == std::string::npos);
  }
  CHECK(io::format_real(0.5) == "0.5");
}

TEST_CASE("matrix JSON") {
  const auto f = io::to_json(fmatrix(BracketParams::fibonacci(), 2, 2, 2, 2));
  CHECK(f.at("rows") == nlohmann::json::array({0, 2}));
  CHECK(f.at("cols") == nlohmann::json::array({0, 2}));
  CHECK(f.at("data").size() == 2);
  CHECK(f.at("data")[0][0].get<double>() == doctest::Approx(0.6180339887));

  const UnitaryMatrix u = compile(fibonacci::space(4), BraidWord(4, {1, -3, 2}));
  const auto j = io::to_json(u);
  CHECK(j.at("dim") == 3);
  CHECK(j.at("data").size() == 9);
  const UnitaryMatrix back = io::unitary_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back == u);
  CHECK_THROWS_AS(io::unitary_from_json({{"dim", 2}, {"data", nlohmann::json::array()}}), ParseError);
}

TEST_CASE("report JSON") {
  CheckReport r{"pentagon", "r=5 k=6", true, 1e-15, 1e-8, 0.01, ""};
  const auto j = io::to_json(r);
  CHECK(j.at("name") == "pentagon");
  CHECK(j.at("passed") == true);
  r.residual = std::numeric_limits<double>::infinity();
  CHECK(io::to_json(r).at("residual") == "inf");
}

TEST_CASE("targets file") {
  std::istringstream ok("1 0 0 0 0 0 1 0\n\n0 1 0 0 0 0 0 -1\n");
  const auto t = io::read_targets(ok, 1e-9);
  REQUIRE(t.size() == 2);
  CHECK(t[1](0, 0) == Complex(0.0, 1.0));
  std::istringstream short_line("1 0 0 0 0 0 1\n");
  CHECK_THROWS_AS(io::read_targets(short_line, 1e-9), ParseError);
  std::istringstream not_unitary("2 0 0 0 0 0 1 0\n");
  CHECK_THROWS_AS(io::read_targets(not_unitary, 1e-9), ParseError);
  std::istringstream bad_real("1 0 0 0 0 0 1 zero\n");
  CHECK_THROWS_AS(io::read_targets(bad_real, 1e-9), ParseError);
}
