#include <doctest.h>

#include "dispset/analysis.hpp"
#include "dispset/generate.hpp"
#include "dispset/newick.hpp"
#include "support.hpp"

using namespace dispset;
using dispset::testing::isomorphic;
using dispset::testing::kNetA;

namespace {

const char* const kNetAArcs =
    "# running example\n"
    "rho\tu\nrho\tv\nu\ta\nu\tr\nv\tr\nv\tc\nr\tb\n";

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidSpec;
}

}  // namespace

TEST_CASE("extended Newick parsing") {
  const Network net = parse_enewick(kNetA);
  CHECK(net.vertex_count() == 7);
  CHECK(net.arc_count() == 7);
  CHECK(net.reticulation_count() == 1);
  CHECK(isomorphic(net, parse_arclist(kNetAArcs)));

  const Network cherry = parse_enewick("(a,b);");
  CHECK(cherry.vertex_count() == 3);
  CHECK(cherry.leaf_set() == LeafSet{"a", "b"});

  CHECK(isomorphic(parse_enewick(" ( ( a , (b) #H1 ) u ,\n(#H1, c) v ) r ; "), net));
  CHECK(parse_enewick("('a b',c);").leaf_set() == LeafSet{"a b", "c"});
  CHECK(parse_enewick("('it''s',c);").leaf_set() == LeafSet{"c", "it's"});
}

TEST_CASE("extended Newick errors") {
  CHECK(code_of([] { parse_enewick("((a,(b)#H1)u,(#H1)v)r;"); }) == ErrorCode::ValidationError);
  CHECK(code_of([] { parse_enewick("((a,(b)#H1),c);"); }) == ErrorCode::HybridArityError);
  CHECK(code_of([] { parse_enewick("((a,(b)#H1),(#H1,#H1,c));"); }) ==
        ErrorCode::HybridArityError);

  try {
    parse_enewick("((a,b)c");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.position() == 7);
  }
  try {
    parse_enewick("(a:1.0,b);");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_enewick(""), SyntaxError);
  CHECK_THROWS_AS(parse_enewick("(a,b); x"), SyntaxError);
  CHECK_THROWS_AS(parse_enewick("(a,);"), SyntaxError);
  CHECK_THROWS_AS(parse_enewick("(a,b)[note];"), SyntaxError);
  CHECK_THROWS_AS(parse_enewick("(a,(b)#H);"), SyntaxError);
}

TEST_CASE("canonical extended Newick output") {
  CHECK(serialize_enewick(parse_enewick(kNetA)) == "((a,(b)#H1),(#H1,c));");
  CHECK(serialize_enewick(parse_enewick("(b,a);")) == "(a,b);");
  CHECK(serialize_enewick(parse_enewick("((c,b),a);")) == "(a,(b,c));");
  CHECK(serialize_enewick(Network::single_leaf("x")) == "x;");
  CHECK(serialize_enewick(parse_enewick("('a b',c);")) == "('a b',c);");
  // Relabelling vertices does not change the output.
  const Network net = parse_enewick(kNetA);
  CHECK(serialize_enewick(dispset::testing::permute_ids(net, 5)) == serialize_enewick(net));
}

TEST_CASE("arc list format") {
  const Network net = parse_arclist(kNetAArcs);
  CHECK(net.leaf_set() == LeafSet{"a", "b", "c"});
  CHECK(is_normal(net));

  const Network relabelled = parse_arclist("p\tq\np\tl1\tlabel=a\nq\tl2\tlabel=b\nq\tl3\tlabel=c\n");
  CHECK(isomorphic(relabelled, parse_enewick("(a,(b,c));")));

  CHECK(code_of([] { parse_arclist(""); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_arclist("# only a comment\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_arclist("r1\ta\nr1\tb\nr2\tc\nr2\td\n"); }) ==
        ErrorCode::ValidationError);
  CHECK(code_of([] { parse_arclist("p\tq\tr\n"); }) == ErrorCode::SyntaxError);

  const Network single = parse_arclist("x\n");
  CHECK(single.vertex_count() == 1);
  CHECK(validate(single).ok);

  CHECK(isomorphic(parse_arclist(serialize_arclist(net)), net));
  CHECK(isomorphic(parse_arclist(serialize_arclist(single)), single));
}

TEST_CASE("round trip on generated networks") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const Network net = random_network(
        {n, seed % (n - 1), seed, seed % 2 ? NetworkClass::TreeChild : NetworkClass::Normal});
    const std::string text = serialize_enewick(net);
    const Network back = parse_enewick(text);
    CAPTURE(text);
    CHECK(isomorphic(back, net));
    CHECK(serialize_enewick(back) == text);
    CHECK(isomorphic(parse_arclist(serialize_arclist(net)), net));
  }
}
