#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <epchar/expression.hpp>

using namespace epchar;

namespace {

errc code_of(const std::string& src) {
  try {
    parse_canonical(src);
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << src;
  return errc::invalid_argument;
}

}  // namespace

TEST(Parse, Delta) {
  const expr e = parse_expression("delta(6)");
  EXPECT_EQ(e.type, expr::kind::delta);
  EXPECT_EQ(e.order, 6);
}

TEST(Parse, NegatedDeltaTimesSum) {
  const expr e = parse_expression("-delta(4)*(exp(a)+exp(b))");
  ASSERT_EQ(e.type, expr::kind::mul);
  EXPECT_EQ(e.args[0].type, expr::kind::neg);
  EXPECT_EQ(e.args[0].args[0].type, expr::kind::delta);
  EXPECT_EQ(e.args[1].type, expr::kind::add);
  EXPECT_EQ(e.args[1].args[0].base, scalar_base::symbol("a"));
}

TEST(Parse, Precedence) {
  // unary minus binds looser than ^, tighter than *
  const expr e = parse_expression("-m^2*3");
  ASSERT_EQ(e.type, expr::kind::mul);
  ASSERT_EQ(e.args[0].type, expr::kind::neg);
  EXPECT_EQ(e.args[0].args[0].type, expr::kind::pow);
  EXPECT_EQ(parse_expression("1 - 2 - 3"), parse_expression("(1 - 2) - 3"));
  EXPECT_EQ(parse_expression("  delta( 1 ) * ( m ^ 2 + 1 ) * exp( 2 ) "),
            parse_expression("delta(1)*(m^2+1)*exp(2)"));
}

TEST(Parse, RationalLiterals) {
  const expr e = parse_expression("3/4*exp(-1/2)");
  EXPECT_EQ(e.args[0].value, rational(3, 4));
  EXPECT_EQ(e.args[1].base, scalar_base(rational(-1, 2)));
}

TEST(Parse, SyntaxErrors) {
  for (const std::string bad : {"", "1 +", "exp()", "exp(m)", "delta(x)", "delta(0)", "foo", "2 ^ -1", "1/0",
                                "(1", "1)", "m ^ m", "exp(1", "3 % 2", "a + 1"}) {
    try {
      parse_expression(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::syntax_error) << bad;
      EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
    }
  }
}

TEST(Parse, DeltaPlacement) {
  EXPECT_EQ(code_of("delta(2) + 1"), errc::nested_delta);
  EXPECT_EQ(code_of("delta(2)^2"), errc::nested_delta);
  EXPECT_EQ(code_of("(delta(2) + exp(3))*2"), errc::nested_delta);
  EXPECT_EQ(code_of("delta(2)*delta(3)"), errc::multiple_delta);
  EXPECT_EQ(code_of("-delta(2)*exp(a)*-delta(2)"), errc::multiple_delta);
  EXPECT_NO_THROW(parse_canonical("exp(2)*delta(3)*m"));
  EXPECT_NO_THROW(parse_canonical("(delta(3))*m"));
}

TEST(Render, RoundTripIsFixedPoint) {
  for (const std::string src :
       {"delta(6)", "-delta(4)*(exp(a)+exp(b))", "delta(1)*(m^2+1)*exp(2)", "delta(2)*(exp(a)-exp(b))",
        "1 - (2 - 3)", "-(m*2)", "(-m)^3", "3/4*exp(-1/2) - -m", "(m + 1)^2*(m - 1)", "-m^2*3",
        "exp(x_1)*m - 7/3", "2*(3*m)", "-(-(m))"}) {
    const expr e = parse_expression(src);
    const std::string text = render_expression(e);
    EXPECT_EQ(parse_expression(text), e) << src << " -> " << text;
    EXPECT_EQ(render_expression(parse_expression(text)), text);
  }
}

TEST(Lower, Examples) {
  const auto d = parse_canonical("delta(2)*(exp(a)-exp(b))");
  EXPECT_EQ(d.r(), 2);
  ASSERT_EQ(d.terms().size(), 2u);
  EXPECT_EQ(d.terms()[0].base, scalar_base::symbol("a"));
  EXPECT_EQ(d.terms()[0].coeff, polynomial::constant(1));
  EXPECT_EQ(d.terms()[1].coeff, polynomial::constant(-1));

  const auto p = parse_canonical("exp(2)*exp(3)");
  EXPECT_EQ(p.r(), 1);
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.terms()[0].base, scalar_base(6));

  const auto q = parse_canonical("delta(1)*(m^2+1)*exp(2)");
  ASSERT_EQ(q.terms().size(), 1u);
  EXPECT_EQ(q.terms()[0].coeff, (polynomial{1, 0, 1}));

  const auto collected = parse_canonical("m*exp(2) + exp(2) - m*exp(2) + 4");
  ASSERT_EQ(collected.terms().size(), 2u);
  EXPECT_EQ(collected.terms()[0].base, scalar_base(1));
  EXPECT_EQ(collected.terms()[1].coeff, polynomial::constant(1));

  EXPECT_TRUE(parse_canonical("exp(a) - exp(a)").is_zero());
}

TEST(Lower, Errors) {
  EXPECT_EQ(code_of("delta(2)*(exp(3)+exp(-3))"), errc::distinctness_violation);
  EXPECT_EQ(code_of("exp(a)*exp(2)"), errc::mixed_base_arithmetic);
  EXPECT_EQ(code_of("exp(a)^2"), errc::mixed_base_arithmetic);
  EXPECT_EQ(code_of("exp(0)"), errc::zero_scalar);
  EXPECT_NO_THROW(parse_canonical("exp(a)^1*m^3"));
}

TEST(Lower, RenderedCanonicalFormReparses) {
  for (const std::string src : {"delta(6)", "-delta(4)*(exp(a)+exp(b))", "delta(3)*((m+1)^2*exp(2) - 1/2*exp(-5))",
                                "(m - 2)*exp(1/3)"}) {
    const auto phi = parse_canonical(src);
    const auto again = parse_canonical(to_expression(phi));
    EXPECT_EQ(again.r(), phi.r());
    ASSERT_EQ(again.terms().size(), phi.terms().size());
    for (std::size_t i = 0; i < phi.terms().size(); ++i) {
      EXPECT_EQ(again.terms()[i].coeff, phi.terms()[i].coeff);
      EXPECT_EQ(again.terms()[i].base, phi.terms()[i].base);
    }
  }
}
