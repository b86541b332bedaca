#include "nichols/braiding.hpp"
#include "nichols/catalog.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace nichols;
using namespace nichols::testing;

namespace {

MultiDegree random_degree(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> d(-2, 3);
    MultiDegree a(n);
    for (int i = 0; i < n; ++i)
        a[i] = d(rng);
    return a;
}

std::vector<ConditionViolation::Kind> kinds(const std::vector<ConditionViolation>& vs)
{
    std::vector<ConditionViolation::Kind> out;
    for (const auto& v : vs)
        out.push_back(v.kind);
    return out;
}

} // namespace

TEST(MultiDegree, OrderIsGradedThenDescendingLex)
{
    EXPECT_LT(MultiDegree({2, 0, 0}), MultiDegree({1, 1, 0}));
    EXPECT_LT(MultiDegree({1, 1, 0}), MultiDegree({0, 0, 2}));
    EXPECT_LT(MultiDegree({0, 0, 2}), MultiDegree({3, 0, 0}));
    auto all = multidegrees_up_to(3, 4);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(all.size(), 35u); // C(4+3, 3)
    EXPECT_EQ(all.front(), MultiDegree(3));
}

TEST(Bicharacter, IsBiadditive)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BraidingMatrix q = random_braiding(rng, 3, 6);
        MultiDegree a = random_degree(rng, 3), b = random_degree(rng, 3), c = random_degree(rng, 3);
        EXPECT_EQ(bicharacter(q, a + b, c), bicharacter(q, a, c) * bicharacter(q, b, c));
        EXPECT_EQ(bicharacter(q, a, b + c), bicharacter(q, a, b) * bicharacter(q, a, c));
        EXPECT_TRUE(bicharacter(q, MultiDegree(3), a).is_one());
        EXPECT_EQ(bicharacter(q, MultiDegree::unit(3, 0), MultiDegree::unit(3, 2)), q(0, 2));
    }
}

TEST(BraidingMatrix, ExtendAndRestrict)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        BraidingMatrix q = random_braiding(rng, 3, 4);
        MultiDegree beta({1, 2, 0});
        BraidingMatrix w = extend_by_root(q, beta);
        ASSERT_EQ(w.rank(), 4);
        EXPECT_EQ(w.restricted({0, 1, 2}), q);
        EXPECT_EQ(w(3, 3), bicharacter(q, beta, beta));
        for (int i = 0; i < 3; ++i) {
            EXPECT_EQ(w(i, 3), bicharacter(q, MultiDegree::unit(3, i), beta));
            EXPECT_EQ(w(3, i), bicharacter(q, beta, MultiDegree::unit(3, i)));
        }
        BraidingMatrix r = q.restricted({2, 0});
        EXPECT_EQ(r(0, 1), q(2, 0));
    }
    BraidingMatrix q = random_braiding(rng, 2, 3);
    EXPECT_THROW(extend_by_root(q, MultiDegree(2)), std::invalid_argument);
    EXPECT_THROW(extend_by_root(q, MultiDegree({1, -1})), std::invalid_argument);
}

TEST(CartanEntry, StandardDefinition)
{
    auto m = [](const std::string& qii, const std::string& qij, int M = 1) {
        return cartan_entry(braiding(M, 2, {{1, 1, qii}, {1, 2, qij}}), 0, 1);
    };
    EXPECT_EQ(m("t", "1"), 0);
    EXPECT_EQ(m("t", "t^-1"), 1);
    EXPECT_EQ(m("t", "t^-3"), 3);
    EXPECT_EQ(m("t", "t"), std::nullopt);
    EXPECT_EQ(m("t^2", "t^-3"), std::nullopt);
    EXPECT_EQ(m("-1", "t"), 1);
    EXPECT_EQ(m("-1", "-1"), 1);
    EXPECT_EQ(m("z", "t", 3), 2);
    EXPECT_EQ(m("z", "z", 3), 2);
    EXPECT_EQ(m("z", "z^2", 3), 1);
    EXPECT_EQ(m("2", "1/4"), 2);
    EXPECT_EQ(m("2", "3"), std::nullopt);
}

TEST(DynkinDiagram, KeyIdentifiesDiagrams)
{
    BraidingMatrix a = braiding(1, 2, {{1, 1, "t"}, {2, 2, "t"}, {1, 2, "t^-1"}});
    BraidingMatrix b = braiding(1, 2, {{1, 1, "t"}, {2, 2, "t"}, {2, 1, "t^-1"}});
    BraidingMatrix c = braiding(1, 2, {{1, 1, "t"}, {2, 2, "t"}, {1, 2, "t^-2"}});
    EXPECT_EQ(dynkin_diagram(a).key(), dynkin_diagram(b).key());
    EXPECT_NE(dynkin_diagram(a).key(), dynkin_diagram(c).key());
    EXPECT_EQ(dynkin_diagram(a).render(), "vertices:\n  1: t\n  2: t\nedges:\n  1 -- 2: 1/(t)");
}

TEST(NecessaryConditions, FourCycle)
{
    BraidingMatrix q = braiding(1, 4, {{1, 1, "-1"}, {2, 2, "-1"}, {3, 3, "-1"}, {4, 4, "-1"},
                                       {1, 2, "t"}, {2, 3, "t"}, {3, 4, "t"}, {1, 4, "t"}});
    auto vs = check_necessary_conditions(q);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].kind, ConditionViolation::Kind::Cycle);
    EXPECT_EQ(vs[0].vertices.size(), 4u);
    // a chord breaks the 4-cycle into triangles
    BraidingMatrix chord = q;
    chord.set(0, 2, Scalar::transcendental(1));
    auto with_chord = kinds(check_necessary_conditions(chord));
    EXPECT_EQ(std::count(with_chord.begin(), with_chord.end(), ConditionViolation::Kind::Cycle), 0);
}

TEST(NecessaryConditions, Triangles)
{
    // all vertices -1, edge product 1
    BraidingMatrix good = braiding(1, 3, {{1, 1, "-1"}, {2, 2, "-1"}, {3, 3, "-1"},
                                          {1, 2, "t"}, {2, 3, "t"}, {1, 3, "t^-2"}});
    EXPECT_TRUE(check_necessary_conditions(good).empty());

    BraidingMatrix bad_product = braiding(1, 3, {{1, 1, "-1"}, {2, 2, "-1"}, {3, 3, "-1"},
                                                 {1, 2, "t"}, {2, 3, "t"}, {1, 3, "t"}});
    EXPECT_EQ(kinds(check_necessary_conditions(bad_product)),
              std::vector<ConditionViolation::Kind>{ConditionViolation::Kind::Triangle});

    BraidingMatrix no_odd = braiding(1, 3, {{1, 1, "t"}, {2, 2, "t"}, {3, 3, "t"},
                                            {1, 2, "t^-1"}, {2, 3, "t^-1"}, {1, 3, "t^2"}});
    auto v = check_necessary_conditions(no_odd);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_NE(v[0].description.find("no vertex labelled -1"), std::string::npos);

    // exactly one -1 vertex: the other two must satisfy q_jj q~_ij = 1
    BraidingMatrix one_odd = braiding(1, 3, {{1, 1, "-1"}, {2, 2, "t"}, {3, 3, "t^2"},
                                             {1, 2, "t^-1"}, {1, 3, "t^-2"}, {2, 3, "t^3"}});
    EXPECT_TRUE(check_necessary_conditions(one_odd).empty());
    one_odd.set(0, 2, Scalar::transcendental(1).pow(-1));
    one_odd.set(1, 2, Scalar::transcendental(1).pow(2));
    EXPECT_EQ(kinds(check_necessary_conditions(one_odd)),
              std::vector<ConditionViolation::Kind>{ConditionViolation::Kind::Triangle});
}

TEST(NecessaryConditions, LabelOneVertex)
{
    BraidingMatrix q = braiding(1, 2, {{1, 1, "1"}, {2, 2, "t"}, {1, 2, "t^2"}});
    auto vs = check_necessary_conditions(q);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].kind, ConditionViolation::Kind::LabelOne);
    EXPECT_EQ(vs[0].vertices, (std::vector<int>{0, 1}));
    // isolated label-1 vertex is fine
    q.set(0, 1, Scalar::one(1));
    EXPECT_TRUE(check_necessary_conditions(q).empty());
}

TEST(NecessaryConditions, CatalogEntriesPass)
{
    for (auto type : catalog_types()) {
        CatalogEntry e = catalog_entry(type);
        EXPECT_TRUE(check_necessary_conditions(e.eminent.braiding).empty()) << e.tag;
    }
}

TEST(TriangleRemark, SeparateFromNecessaryConditions)
{
    // D21a-4.3 is a triangle of -1 vertices: passes both
    CatalogEntry e = catalog_entry(ExceptionalType::D21a_3);
    EXPECT_TRUE(check_triangle_remark(e.eminent.braiding).empty());
    BraidingMatrix one_odd_tri = braiding(1, 3, {{1, 1, "-1"}, {2, 2, "t"}, {3, 3, "t^2"},
                                                 {1, 2, "t^-1"}, {1, 3, "t^-2"}, {2, 3, "t^3"}});
    EXPECT_TRUE(check_necessary_conditions(one_odd_tri).empty());
    auto remark = check_triangle_remark(one_odd_tri);
    ASSERT_FALSE(remark.empty());
    EXPECT_EQ(remark[0].kind, ConditionViolation::Kind::TriangleRemark);
}

TEST(ConnectedComponents, Blocks)
{
    BraidingMatrix q = braiding(1, 5, {{1, 2, "t"}, {4, 5, "t"}});
    EXPECT_EQ(connected_components(q), (std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}}));
}

TEST(Recognizer, TagsCatalogEntriesUnderRelabeling)
{
    for (auto type : catalog_types()) {
        CatalogEntry e = catalog_entry(type);
        EXPECT_EQ(recognize_exceptional_type(e.eminent.braiding).type, type) << e.tag;
        BraidingMatrix permuted = e.eminent.braiding.restricted({2, 0, 1});
        TypeMatch m = recognize_exceptional_type(permuted);
        EXPECT_EQ(m.type, type) << e.tag;
        ASSERT_EQ(m.relabel.size(), 3u);
    }
    EXPECT_EQ(recognize_exceptional_type(cartan_braiding({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})).type,
              ExceptionalType::Other);
}

TEST(Recognizer, TagStrings)
{
    for (auto type : catalog_types())
        EXPECT_EQ(exceptional_type_from_string(to_string(type)), type);
    EXPECT_EQ(exceptional_type_from_string("nonsense"), std::nullopt);
}
