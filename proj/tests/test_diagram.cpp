#include <random>

#include "doctest.h"
#include "racg/diagram.hpp"
#include "racg/error.hpp"
#include "suite.hpp"

using namespace racg;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected racg::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("parse_diagram examples") {
  const auto k3 = parse_diagram("n 3\nedge 1 2\nedge 2 3\nedge 1 3\n");
  CHECK(k3 == suite::triangle());
  CHECK(k3.edge_count() == 3);
  const auto p3 = parse_diagram("# a path\n\nn 3   # three vertices\nedge 1 2\nedge 2 3");
  CHECK(p3 == suite::path3());
  CHECK(p3.commutes(0, 2));
  CHECK(!p3.commutes(0, 1));
  CHECK(kind_of([] { parse_diagram("n 2\nedge 1 2\n"); }) == ErrorKind::TooFewVertices);
}

TEST_CASE("parse_diagram errors carry the line number") {
  try {
    parse_diagram("n 3\nedge 1 2\nedg 2 3\n");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(kind_of([] { parse_diagram("n 3\nedge 1 4\n"); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { parse_diagram("n 3\nedge 0 1\n"); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { parse_diagram("n 3\nedge 1 2\nedge 2 1\n"); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { parse_diagram("n 3\nedge 2 2\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_diagram("edge 1 2\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_diagram("# nothing\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_diagram("n three\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_diagram("n 3\nedge 1 2 3\n"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("is_connected examples") {
  CHECK(suite::triangle().is_connected());
  CHECK(suite::path3().is_connected());
  CHECK(!CoxeterDiagram(4, {{0, 1}, {2, 3}}).is_connected());
  CHECK(!CoxeterDiagram(3, {}).is_connected());
}

TEST_CASE("cycle_complement examples") {
  const auto c5 = cycle_complement(5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5 == CoxeterDiagram(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));
  CHECK(cycle_complement(6).edge_count() == 9);
  CHECK(kind_of([] { cycle_complement(4); }) == ErrorKind::NTooSmall);
  for (int n = 5; n <= 14; ++n) {
    const auto g = cycle_complement(n);
    CHECK(g.is_connected());
    CHECK(g.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2 - n));
    for (int i = 0; i < n; ++i) CHECK(g.commutes(i, (i + 1) % n));
  }
}

TEST_CASE("serialize/parse round trip keeps vertex and edge order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = suite::random_connected(rng, 3 + trial % 8);
    const auto back = parse_diagram(serialize_diagram(g));
    CHECK(back == g);
    CHECK(back.edges() == g.edges());
    CHECK(back.is_connected());
  }
}
