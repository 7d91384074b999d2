#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ifg/selftest.hpp"

using namespace ifg;

#ifndef IFG_GOLDEN_DIR
#error "IFG_GOLDEN_DIR must be defined"
#endif

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("every self check passes and ids are sorted and unique") {
  auto rs = run_selftest();
  CHECK(rs.size() >= 40);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    CAPTURE(rs[i].detail);
    CHECK_MESSAGE(rs[i].pass, rs[i].id);
    if (i > 0) CHECK(rs[i - 1].id < rs[i].id);
  }
}

TEST_CASE("worked examples match the golden file") {
  CHECK(worked_examples() == read_file(std::string(IFG_GOLDEN_DIR) + "/worked_examples.txt"));
}

TEST_CASE("worked examples state the published values") {
  auto w = worked_examples();
  CHECK(has_line(w, "D01: plus=[{},{00},{11},{00,11}] minus=[{},{10},{01},{01,10}]"));
  CHECK(has_line(w, "C_0,{0,1}(D01): plus=[{},{00},{10},{00,10},{01},{11},{01,11}] minus=[{}]"));
  CHECK(has_line(w, "(D01 ._{} C_0,{0,1}(D01))+: {},{00},{11}"));
  CHECK(has_line(w, "absorption |X+|: 7"));
  CHECK(has_line(w, "absorption {00,01,10,11} in (X +_{} (X +_{0,1} X))+: yes"));
  CHECK(has_line(w, "distributivity V1 in Y+: yes"));
  CHECK(has_line(w, "distributivity V2 in Y+: yes"));
  CHECK(has_line(w, "distributivity V in (Y +_{1} Y)+: yes"));
  CHECK(has_line(w, "distributivity V in Y+: no"));
  CHECK(has_line(w, "C3 D01 <= C_1,{0}(D01): yes"));
  CHECK(has_line(w, "C3 {00,11} in (C_1,{0,1}(1) ._{} C_1,{0}(D01))+: yes"));
  CHECK(has_line(w, "C3 {00,11} in C_1,{0,1}(1 ._{} C_1,{0}(D01))+: no"));
  CHECK(has_line(w, "C7 below Omega: yes"));
  CHECK(has_line(w, "C7 minus part differs from 0-: yes"));
  CHECK(has_line(w, "(X +_{} Y)+: {},{0},{1},{0,1}"));
  CHECK(has_line(w, "((X +_{} Y) +_{0} Z)+: {},{0},{1},{0,1},{2}"));
  CHECK(has_line(w, "(Y +_{0} Z)+: {},{1},{2}"));
  CHECK(has_line(w, "(X +_{} (Y +_{0} Z))+: {},{0},{1},{0,1},{2},{0,2}"));
}
