#include "nichols/catalog.hpp"
#include "nichols/errors.hpp"
#include "nichols/presentation_io.hpp"
#include "nichols/rel_expr.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace nichols;
using namespace nichols::testing;

namespace {

struct Fixture {
    BraidingMatrix q = braiding(3, 3, {{1, 1, "z"}, {2, 2, "-1"}, {3, 3, "t"}, {1, 2, "t^-1"}, {2, 3, "z*t"}, {3, 1, "t^2"}});
    EvalContext ctx{GroundField{3, "t"}, 3, &q, {{"s", Scalar::zeta(3) / Scalar::transcendental(3)}}};
    FreeElement x(int i) const { return FreeElement::generator(3, i - 1); }
    FreeElement eval(const std::string& text) const { return eval_rel_expr(text, ctx); }
};

std::size_t error_offset(const std::string& text)
{
    try {
        parse_rel_expr(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return std::string::npos;
}

// Random homogeneous expression text over three generators.
std::string random_expr(std::mt19937& rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 5);
    std::uniform_int_distribution<int> gen(1, 3);
    switch (pick(rng)) {
    case 0: return "x(" + std::to_string(gen(rng)) + ")";
    case 1: return "[" + random_expr(rng, depth - 1) + ", " + random_expr(rng, depth - 1) + "]";
    case 2: return "ad(" + std::to_string(gen(rng)) + "; " + random_expr(rng, depth - 1) + ")^2";
    case 3: return "((1 - q_(1,2))*" + random_expr(rng, depth - 1) + ")";
    case 4: {
        std::string a = random_expr(rng, depth - 1);
        return "(" + a + " - s^2/(1 + t)*" + a + ")";
    }
    default: return "(" + random_expr(rng, depth - 1) + " " + random_expr(rng, depth - 1) + ")";
    }
}

} // namespace

TEST(Dsl, ParseTreeShape)
{
    RelExpr e = parse_rel_expr("[x(1,2,3),x(2)]");
    EXPECT_EQ(e.root().kind, RelNode::Kind::Commutator);
    ASSERT_EQ(e.root().children.size(), 2u);
    EXPECT_EQ(e.root().children[0]->kind, RelNode::Kind::Iterated);
    EXPECT_EQ(e.root().children[0]->indices, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(e.dump(), "commutator\n  iterated x(1,2,3)\n  generator x(2)\n");
}

TEST(Dsl, EvaluatesBrackets)
{
    Fixture f;
    EXPECT_EQ(f.eval("x(1,2)"), braided_commutator(f.q, f.x(1), f.x(2)));
    EXPECT_EQ(f.eval("x(1,2,3)"), braided_commutator(f.q, f.x(1), braided_commutator(f.q, f.x(2), f.x(3))));
    EXPECT_EQ(f.eval("[x(1,2), x(3)]"), braided_commutator(f.q, f.eval("x(1,2)"), f.x(3)));
    EXPECT_EQ(f.eval("ad(1; x(2))^2"), ad_power(f.q, 0, f.x(2), 2));
    EXPECT_EQ(f.eval("x(1,1,2)"), ad_power(f.q, 0, f.x(2), 2));
    EXPECT_EQ(f.eval("x(1)*x(2) - q_(1,2)*x(2)*x(1)"), f.eval("x(1,2)"));
    EXPECT_EQ(f.eval("x(1) x(2)"), f.x(1) * f.x(2));
    EXPECT_EQ(f.eval("x(2)^3"), power(f.x(2), 3));
    EXPECT_EQ(f.eval("x(1,3)/(1 - t)"), (Scalar::one(3) - Scalar::transcendental(3)).inverse() * f.eval("x(1,3)"));
}

TEST(Dsl, Scalars)
{
    Fixture f;
    Scalar t = Scalar::transcendental(3), z = Scalar::zeta(3);
    EXPECT_EQ(parse_scalar("1/(z*t)", f.ctx), (z * t).inverse());
    EXPECT_EQ(parse_scalar("t^-2", f.ctx), t.pow(-2));
    EXPECT_EQ(parse_scalar("-(1 - s)", f.ctx), z / t - Scalar::one(3));
    EXPECT_EQ(parse_scalar("q_(2,3)", f.ctx), z * t);
    EXPECT_EQ(parse_scalar("3/6", f.ctx), Scalar::rational(3, mpq_class(1, 2)));
    EXPECT_THROW(parse_scalar("x(1)", f.ctx), std::invalid_argument);
}

TEST(Dsl, ParseErrorOffsets)
{
    EXPECT_EQ(error_offset("x(1,2"), 5u);
    EXPECT_EQ(error_offset("[x(1), ]"), 7u);
    EXPECT_EQ(error_offset("x(1) % x(2)"), 5u);
    EXPECT_EQ(error_offset("x()"), 2u);
    EXPECT_EQ(error_offset("ad(1; x(2)^2"), 12u);
    EXPECT_EQ(error_offset(""), 0u);
}

TEST(Dsl, EvaluationErrors)
{
    Fixture f;
    EXPECT_THROW(f.eval("x(1) + x(1)*x(2)"), NonHomogeneous);
    EXPECT_THROW(f.eval("x(4)"), std::out_of_range);
    EXPECT_THROW(f.eval("x(0)"), std::out_of_range);
    EXPECT_THROW(f.eval("foo*x(1)"), ParseError);
    EXPECT_THROW(f.eval("x(1)/0"), InvalidOperand);
    EXPECT_THROW(f.eval("x(1)/x(2)"), std::invalid_argument);
    EXPECT_THROW(f.eval("x(1)^-1"), std::invalid_argument);
}

TEST(Dsl, ToTextRoundTripOnCatalog)
{
    for (auto type : catalog_types()) {
        CatalogEntry e = catalog_entry(type);
        std::vector<RelExpr> all = e.eminent.relations;
        for (const auto& g : e.pbw)
            all.push_back(g.expr);
        all.push_back(e.z);
        for (const auto& r : all) {
            RelExpr back = parse_rel_expr(r.to_text());
            EXPECT_EQ(back.to_text(), r.to_text());
            EXPECT_EQ(back.dump(), r.dump());
            EXPECT_EQ(e.eminent.evaluate(back), e.eminent.evaluate(r));
        }
    }
}

TEST(Dsl, ToTextRoundTripOnRandomExpressions)
{
    Fixture f;
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        std::string text = random_expr(rng, 3);
        RelExpr e = parse_rel_expr(text);
        RelExpr back = parse_rel_expr(e.to_text());
        EXPECT_EQ(back.dump(), e.dump()) << text;
        EXPECT_EQ(eval_rel_expr(back, f.ctx), eval_rel_expr(e, f.ctx)) << text;
    }
}

TEST(Dsl, Relabel)
{
    RelExpr e = parse_rel_expr("[x(1,2), x(2)] - s*q_(1,2)*ad(1; x(2))^2");
    RelExpr r = relabel(e, 3, {{"s", "s_2"}});
    EXPECT_EQ(r.to_text(), "[x(4,5), x(5)] - s_2*q_(4,5)*ad(4; x(5))^2");
}

TEST(PresentationFile, RoundTripsEveryCatalogEntry)
{
    for (auto type : catalog_types()) {
        CatalogEntry e = catalog_entry(type);
        std::string text = format_presentation_file(e.eminent, &e.pbw, &e.series);
        PresentationFile f = parse_presentation_file(text);
        EXPECT_EQ(f.presentation.name, e.eminent.name);
        EXPECT_EQ(f.presentation.braiding, e.eminent.braiding);
        EXPECT_EQ(f.presentation.evaluated_relations(), e.eminent.evaluated_relations());
        ASSERT_TRUE(f.pbw);
        EXPECT_EQ(pbw_spec_to_text(*f.pbw), pbw_spec_to_text(e.pbw));
        ASSERT_TRUE(f.series);
        EXPECT_EQ(f.series->expand(6), e.series.expand(6));
        EXPECT_EQ(format_presentation_file(f.presentation, &*f.pbw, &*f.series), text);
    }
}

TEST(PresentationFile, HandWrittenInput)
{
    const std::string text = R"(# quantum plane at a cube root of unity
[presentation]
name = plane
[field]
M = 3
transcendental = t
[params]
q = "z"
[braiding]
theta = 2
q(1,1) = "q"
q(2,2) = "q"
q_(1,2) = "q^-1"   # only the product matters for the diagram
[relations]
x(1)^3
x(2)^3
x(1,1,2)
x(2,2,1)
[pbw]
x(2) : 2
x(1,2) : 2
x(1) : 2
)";
    PresentationFile f = parse_presentation_file(text);
    EXPECT_EQ(f.presentation.rank(), 2);
    EXPECT_EQ(f.presentation.relations.size(), 4u);
    EXPECT_EQ(f.presentation.braiding(0, 1), Scalar::zeta(3, 2));
    EXPECT_TRUE(f.presentation.braiding(1, 0).is_one());
    ASSERT_TRUE(f.pbw);
    EXPECT_EQ((*f.pbw)[1].height, 2);
    EXPECT_FALSE(f.series);
}

TEST(PresentationFile, ErrorOffsetsPointIntoTheFile)
{
    const std::string text = "[field]\nM = 3\n[braiding]\ntheta = 2\n[relations]\nx(1)^3\nx(1,2))\n";
    try {
        parse_presentation_file(text);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), text.find("x(1,2))") + 6);
    }
    EXPECT_THROW(parse_presentation_file("[field]\nM = 0\n[braiding]\ntheta = 1\n"), std::exception);
    EXPECT_THROW(parse_presentation_file("theta = 2\n"), ParseError);
    EXPECT_THROW(parse_presentation_file("[nonsense]\n"), ParseError);
}
