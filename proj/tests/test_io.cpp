#include <sstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "sgx/error.hpp"
#include "sgx/io.hpp"

using namespace sgx;

namespace {
  std::filesystem::path data(char const* name) {
    return std::filesystem::path(SGX_TEST_DATA) / name;
  }

  std::string parse_error(std::string const& text) {
    std::istringstream in(text);
    try {
      parse_semigroup(in, "input");
    } catch (ParseError const& e) {
      return e.what();
    }
    return {};
  }
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("semigroup files") {
    CHECK(read_semigroup(data("rz2.sgp")) == fx::RZ2());
    CHECK(read_semigroup(data("lz2.sgp")) == fx::LZ2());
    CHECK(read_semigroup(data("z2.sgp")) == fx::Z2());
    CHECK(read_semigroup(data("n2.sgp")) == fx::N2());
    CHECK(read_semigroup(data("t1.sgp")) == fx::T1());
    CHECK(read_semigroup(data("fact_not_firm.sgp")) == fx::factorizable_not_firm());
  }

  TEST_CASE("round trips") {
    for (auto const& S : fx::oracle_corpus(3)) {
      std::ostringstream out;
      write_semigroup(out, S);
      std::istringstream in(out.str());
      CHECK(parse_semigroup(in, "round-trip") == S);
    }
    std::ostringstream out;
    write_act(out, Biact::regular(fx::Z2()));
    CHECK(out.str() == "act bi 2\n0 1\n1 0\n0 1\n1 0\n");
  }

  TEST_CASE("comments and blank lines") {
    std::istringstream in("# header comment\n\nsemigroup 2  # order\n0 1\n\n0 1 # row\n");
    CHECK(parse_semigroup(in, "x") == fx::RZ2());
  }

  TEST_CASE("errors name the file and line") {
    CHECK(parse_error("semigroup 2\n0 1\n0\n") == "input:3: semigroup row 1 has 1 entries, expected 2");
    CHECK(parse_error("semigroup 2\n0 1\n0 2\n") == "input:3: entry 2 is out of range (must be < 2)");
    CHECK(parse_error("semigroup 2\n0 0\n1 0\n")
          == "input:3: associativity fails at (x, y, z) = (1, 0, 1)");
    CHECK(parse_error("semigroup 1\n0\n0\n") == "input:3: unexpected trailing content '0'");
    CHECK(parse_error("semigroup 2\n0 1\n") == "input:2: unexpected end of input, expected semigroup row 1");
    CHECK(parse_error("group 2\n") == "input:1: expected 'semigroup', got 'group'");
    CHECK(parse_error("semigroup x\n") == "input:1: expected a non-negative integer for semigroup size, got 'x'");
    CHECK(parse_error("semigroup 0\n") == "input:1: semigroup order must be at least 1");

    auto const file_error = [](char const* name) -> std::string {
      try {
        read_semigroup(data(name));
      } catch (ParseError const& e) {
        return e.what();
      }
      return {};
    };
    CHECK(file_error("not_assoc.sgp").find("not_assoc.sgp:3: associativity fails") != std::string::npos);
    CHECK(file_error("bad_row.sgp").find("bad_row.sgp:") != std::string::npos);
    CHECK(file_error("bad_range.sgp").find("bad_range.sgp:") != std::string::npos);
    CHECK(file_error("missing.sgp").find("missing.sgp:0: cannot open file") != std::string::npos);
  }

  TEST_CASE("act files") {
    auto const Z2 = fx::Z2();
    CHECK(read_act_kind(data("z2_right.act")) == ActKind::right);
    CHECK(read_act_kind(data("z2_left.act")) == ActKind::left);
    auto const right = read_right_act(data("z2_right.act"), Z2);
    CHECK(std::ranges::equal(right.table(), RightAct::regular(Z2).table()));
    auto const left = read_left_act(data("z2_left.act"), Z2);
    CHECK(std::ranges::equal(left.table(), LeftAct::regular(Z2).table()));
    CHECK_THROWS_AS(read_left_act(data("z2_right.act"), Z2), ParseError);
    // A right regular act of RZ2 is not a right act of Z2.
    try {
      read_right_act(data("rz2_right.act"), Z2);
      FAIL("expected ParseError");
    } catch (ParseError const& e) {
      CHECK(e.line == 1);
    }
  }

  TEST_CASE("pairing, rees and morphism files") {
    auto const p = read_pairing(data("z2_mult.pairing"));
    CHECK(p.p_count == 2);
    CHECK(p.entries == std::vector<Element>{0, 1, 1, 0});
    auto const r = read_rees(data("rees_2x2.rees"));
    CHECK(r.u_count == 2);
    CHECK(r.v_count == 2);
    CHECK(r.sandwich == std::vector<Element>{0, 1, 1, 1});
  }

  TEST_CASE("pair descriptors") {
    auto const z2 = read_pair(data("z2.pair"));
    CHECK(z2.semigroup() == fx::Z2());
    CHECK(z2(1, 1) == 0);
    auto const n2 = read_pair(data("n2.pair"));
    CHECK(n2.A().size() == 2);
    CHECK(n2(1, 1) == 0);
  }
}
