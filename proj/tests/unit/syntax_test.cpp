#include <gtest/gtest.h>

#include "generators.hpp"
#include "teamlogic/errors.hpp"
#include "teamlogic/syntax.hpp"

using namespace teamlogic;

namespace {

Formula P(const char* s) { return Formula::prop(s); }

std::size_t error_offset(const char* text) {
  try {
    parse_formula(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

}  // namespace

TEST(Parse, Literals) {
  EXPECT_EQ(parse_formula("p & ~q"), Formula::conj(P("p"), Formula::neg_prop("q")));
  EXPECT_EQ(parse_formula("top"), Formula::top());
  EXPECT_EQ(parse_formula(" bot "), Formula::bot());
}

TEST(Parse, InclusionAtom) {
  EXPECT_EQ(parse_formula("[p1,p2 <= q1,q2]"), Formula::incl({P("p1"), P("p2")}, {P("q1"), P("q2")}));
  EXPECT_EQ(parse_formula("[dia p | q <= ~p]"),
            Formula::incl({Formula::disj(Formula::dia(P("p")), P("q"))}, {Formula::neg_prop("p")}));
}

TEST(Parse, Precedence) {
  EXPECT_EQ(parse_formula("p | q & r"), Formula::disj(P("p"), Formula::conj(P("q"), P("r"))));
  EXPECT_EQ(parse_formula("dia p & q"), Formula::conj(Formula::dia(P("p")), P("q")));
  EXPECT_EQ(parse_formula("p |! q | r"), Formula::disj(Formula::nedisj(P("p"), P("q")), P("r")));
  EXPECT_EQ(parse_formula("p | q |! r"), Formula::nedisj(Formula::disj(P("p"), P("q")), P("r")));
  EXPECT_EQ(parse_formula("a & b & c"), Formula::conj(Formula::conj(P("a"), P("b")), P("c")));
  EXPECT_EQ(parse_formula("nab box dia p"), Formula::nab(Formula::box(Formula::dia(P("p")))));
  EXPECT_EQ(parse_formula("a & (b & c)"), Formula::conj(P("a"), Formula::conj(P("b"), P("c"))));
}

TEST(Parse, KeywordsAreNotIdentifiers) {
  EXPECT_EQ(parse_formula("diamond"), P("diamond"));
  EXPECT_EQ(parse_formula("boxes & topx"), Formula::conj(P("boxes"), P("topx")));
  EXPECT_THROW(parse_formula("~top"), ParseError);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_formula("[[p <= q] <= r]"), ParseError);
  EXPECT_THROW(parse_formula("[p, q <= r]"), ParseError);
  EXPECT_THROW(parse_formula("[nab p <= q]"), ParseError);
  EXPECT_THROW(parse_formula("~(p & q)"), ParseError);
  EXPECT_THROW(parse_formula(""), ParseError);
  EXPECT_THROW(parse_formula("p &"), ParseError);
  EXPECT_THROW(parse_formula("(p"), ParseError);
  EXPECT_THROW(parse_formula("p q"), ParseError);
  EXPECT_THROW(parse_formula("p $ q"), ParseError);
}

TEST(Parse, ErrorOffsets) {
  EXPECT_EQ(error_offset("p & "), 4u);
  EXPECT_EQ(error_offset("p q"), 2u);
  EXPECT_EQ(error_offset("p $ q"), 2u);
}

TEST(Parse, NestedInclusionMessage) {
  try {
    parse_formula("[[p <= q] <= r]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("nested inclusion atom"), std::string::npos);
  }
}

TEST(Print, Examples) {
  EXPECT_EQ(print_formula(Formula::nab(P("p"))), "nab p");
  EXPECT_EQ(print_formula(Formula::disj(P("p"), Formula::conj(P("q"), P("r")))), "p | (q & r)");
  EXPECT_EQ(print_formula(Formula::incl({P("p1"), P("p2")}, {P("q1"), P("q2")})), "[p1, p2 <= q1, q2]");
  EXPECT_EQ(print_formula(Formula::conj(Formula::conj(P("a"), P("b")), P("c"))), "a & b & c");
  EXPECT_EQ(print_formula(Formula::conj(P("a"), Formula::conj(P("b"), P("c")))), "a & (b & c)");
  EXPECT_EQ(print_formula(Formula::nedisj(Formula::disj(P("a"), P("b")), P("c"))), "(a | b) |! c");
  EXPECT_EQ(print_formula(Formula::box(Formula::conj(P("a"), Formula::neg_prop("b")))), "box (a & ~b)");
  EXPECT_EQ(print_formula(Formula::dia(Formula::top())), "dia top");
}

TEST(Print, RoundTripGenerated) {
  const Dialect dialects[] = {Dialect::ML, Dialect::MINC, Dialect::MLNab, Dialect::MLNeDisj};
  int checked = 0;
  for (Dialect d : dialects) {
    teamlogic::testing::GenSpec spec{d, 3, 14, {"p", "q", "r"}};
    teamlogic::testing::FormulaGen gen(spec, 1234 + static_cast<int>(d));
    for (int i = 0; i < 250; ++i) {
      Formula f = gen.next();
      const std::string text = print_formula(f);
      Formula back = parse_formula(text);
      ASSERT_EQ(back, f) << text;
      ASSERT_EQ(print_formula(back), text);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1000);
}

TEST(Print, CanonicalStringsAreFixedPoints) {
  for (const char* s : {"p | (q & r)", "nab p", "[p1, p2 <= q1, q2]", "(p | q) & (nab p & nab q)", "~p |! top"}) {
    EXPECT_EQ(print_formula(parse_formula(s)), s);
  }
  EXPECT_EQ(print_formula(parse_formula("((p))&(q)")), "p & q");
}
