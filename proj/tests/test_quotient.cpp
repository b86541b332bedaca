#include "nichols/catalog.hpp"
#include "nichols/errors.hpp"
#include "nichols/quotient.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace nichols;
using namespace nichols::testing;

namespace {

Presentation plain(int M, int theta, const std::vector<std::tuple<int, int, std::string>>& entries,
                   const std::vector<std::string>& relations)
{
    return make_presentation("test", GroundField{M, "t"}, theta, {}, entries, relations);
}

mpz_class binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Rank by plain Gaussian elimination on rationals.
int rank_oracle(std::vector<std::vector<mpq_class>> m)
{
    int rank = 0;
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        int p = rank;
        while (p < static_cast<int>(m.size()) && m[p][c] == 0)
            ++p;
        if (p == static_cast<int>(m.size()))
            continue;
        std::swap(m[p], m[rank]);
        for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
            mpq_class f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

FreeElement random_homogeneous(std::mt19937& rng, GradedQuotient& g, const MultiDegree& a)
{
    // random combination of words of degree a
    FreeElement u(g.rank());
    std::vector<Word> words{Word{}};
    for (int i = 0; i < g.rank(); ++i)
        for (int k = 0; k < a[i]; ++k) {
            std::vector<Word> next;
            for (const auto& w : words)
                for (std::size_t pos = 0; pos <= w.size(); ++pos) {
                    Word v = w;
                    v.insert(v.begin() + static_cast<long>(pos), static_cast<std::uint8_t>(i));
                    next.push_back(v);
                }
            words = next;
        }
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int k = 0; k < 4; ++k)
        u.add_term(words[pick(rng)], random_scalar(rng, g.braiding().field().M));
    return u;
}

} // namespace

TEST(RowReduce, SerialAndParallelAgreeAndMatchRankOracle)
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::bernoulli_distribution present(0.35);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 3 + trial % 9, cols = 4 + trial % 7;
        std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols, Scalar::zero(1)));
        std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols, 0));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (present(rng)) {
                    int v = entry(rng);
                    m[r][c] = Scalar::from_int(1, v);
                    q[r][c] = v;
                }
        auto serial = row_reduce(m, Execution::Serial);
        auto parallel = row_reduce(m, Execution::Parallel);
        EXPECT_EQ(serial, parallel);
        EXPECT_EQ(static_cast<int>(serial.size()), rank_oracle(q));
        // reduced echelon shape
        int last = -1;
        for (const auto& row : serial) {
            int p = 0;
            while (row[p].is_zero())
                ++p;
            EXPECT_GT(p, last);
            EXPECT_TRUE(row[p].is_one());
            for (const auto& other : serial)
                if (&other != &row)
                    EXPECT_TRUE(other[p].is_zero());
            last = p;
        }
    }
}

TEST(GradedQuotient, FreeAlgebraDimensionsAreMultinomial)
{
    GradedQuotient g(plain(1, 2, {}, {}), 6);
    for (const auto& a : multidegrees_up_to(2, 6))
        EXPECT_EQ(g.dimension(a), binomial(a.total(), a[0])) << a.to_string();
}

TEST(GradedQuotient, TruncatedPolynomialRing)
{
    GradedQuotient g(plain(5, 1, {{1, 1, "z"}}, {"x(1)^5"}), 8);
    for (int k = 0; k <= 8; ++k)
        EXPECT_EQ(g.dimension(MultiDegree({k})), k < 5 ? 1 : 0);
}

TEST(GradedQuotient, QuantumPlaneIsAPolynomialRing)
{
    GradedQuotient g(plain(1, 2, {{1, 1, "t"}, {2, 2, "t^2"}, {1, 2, "t^3"}}, {"x(1,2)"}), 7);
    for (const auto& a : multidegrees_up_to(2, 7))
        EXPECT_EQ(g.dimension(a), 1);
    EXPECT_EQ(g.component_basis(MultiDegree({1, 1})), (std::vector<Word>{Word{0, 1}}));
}

TEST(GradedQuotient, GenericA2SerreHasPositivePartHilbertSeries)
{
    // 1 / ((1 - t1)(1 - t1 t2)(1 - t2))
    Presentation p = cartan_serre_presentation(cartan_braiding({{2, -1}, {-1, 2}}));
    GradedQuotient g(p, 8);
    for (const auto& a : multidegrees_up_to(2, 8))
        EXPECT_EQ(g.dimension(a), std::min(a[0], a[1]) + 1) << a.to_string();
}

TEST(GradedQuotient, NicholsA2AtCubeRootHasDimension27)
{
    BraidingMatrix q = braiding(3, 2, {{1, 1, "z"}, {2, 2, "z"}, {1, 2, "z^2"}});
    Presentation p = make_presentation("A2", GroundField{3, "t"}, 2, {},
                                       {{1, 1, "z"}, {2, 2, "z"}, {1, 2, "z^2"}},
                                       {"x(1)^3", "x(2)^3", "x(1,1,2)", "x(2,2,1)", "x(1,2)^3"});
    GradedQuotient g(p, 9);
    int total = 0;
    for (const auto& [a, n] : g.hilbert_table(9)) {
        total += n;
        if (a.total() == 9)
            EXPECT_EQ(n, 0);
    }
    EXPECT_EQ(total, 27);
    EXPECT_EQ(g.dimension(MultiDegree({4, 4})), 1); // top degree
}

TEST(GradedQuotient, NormalFormIsIdempotentAndLinear)
{
    std::mt19937 rng(13);
    for (auto type : catalog_types()) {
        CatalogEntry e = catalog_entry(type);
        GradedQuotient g(e.eminent, 6);
        for (int trial = 0; trial < 10; ++trial) {
            MultiDegree a({1 + trial % 2, 1 + trial % 3, 1});
            FreeElement u = random_homogeneous(rng, g, a), v = random_homogeneous(rng, g, a);
            FreeElement nu = g.normal_form(u);
            EXPECT_EQ(g.normal_form(nu), nu);
            Scalar c = random_scalar(rng, e.M);
            EXPECT_EQ(g.normal_form(u + c * v), nu + c * g.normal_form(v));
            for (const auto& [w, coeff] : nu.terms()) {
                (void)coeff;
                const auto& basis = g.component_basis(a);
                EXPECT_TRUE(std::binary_search(basis.begin(), basis.end(), w, WordLess{}));
            }
        }
    }
}

TEST(GradedQuotient, IdealElementsReduceToZero)
{
    std::mt19937 rng(19);
    for (auto type : catalog_types()) {
        CatalogEntry e = catalog_entry(type);
        GradedQuotient g(e.eminent, 6);
        for (const auto& r : e.eminent.evaluated_relations()) {
            EXPECT_TRUE(g.is_zero(r));
            FreeElement left = FreeElement::word(3, random_word(rng, 3, 1));
            FreeElement right = FreeElement::word(3, random_word(rng, 3, 1));
            EXPECT_TRUE(g.is_zero(left * r * right));
        }
    }
}

TEST(GradedQuotient, AddingARelationNeverIncreasesDimensions)
{
    for (auto type : catalog_types()) {
        CatalogEntry e = catalog_entry(type);
        GradedQuotient em(e.eminent, 6);
        GradedQuotient smaller(e.eminent.without_relation(0), 6);
        GradedQuotient bigger(e.eminent.with_relation("x(1)*x(2)*x(3)"), 6);
        for (const auto& a : multidegrees_up_to(3, 6)) {
            EXPECT_LE(em.dimension(a), smaller.dimension(a));
            EXPECT_LE(bigger.dimension(a), em.dimension(a));
        }
    }
}

TEST(GradedQuotient, SerialAndParallelAgree)
{
    for (auto type : catalog_types()) {
        CatalogEntry e = catalog_entry(type);
        GradedQuotient s(e.eminent, 7, Execution::Serial);
        GradedQuotient p(e.eminent, 7, Execution::Parallel);
        EXPECT_EQ(s.hilbert_table(7), p.hilbert_table(7)) << e.tag;
        for (const auto& a : multidegrees_up_to(3, 7))
            EXPECT_EQ(s.component_basis(a), p.component_basis(a));
        FreeElement z = e.eminent.evaluate(e.z);
        if (z.degree()->total() <= 7)
            EXPECT_EQ(s.normal_form(z), p.normal_form(z));
    }
}

TEST(GradedQuotient, PrimitivityAndCentrality)
{
    // quantum plane with q11 a cube root of unity: x1^3 is primitive and q-central
    Presentation p = plain(3, 2, {{1, 1, "z"}, {2, 2, "t"}, {1, 2, "t"}}, {"x(1,2)"});
    GradedQuotient g(p, 4);
    FreeElement x1 = FreeElement::generator(2, 0);
    EXPECT_TRUE(g.is_primitive(power(x1, 3)));
    EXPECT_TRUE(g.is_q_central(power(x1, 3)));
    EXPECT_FALSE(g.is_primitive(power(x1, 2)));
    EXPECT_FALSE(g.is_q_central(x1));
    EXPECT_FALSE(g.is_primitive(FreeElement::generator(2, 0) * FreeElement::generator(2, 1)));
}

TEST(GradedQuotient, CutoffIsEnforced)
{
    GradedQuotient g(plain(1, 2, {}, {}), 3);
    EXPECT_THROW(g.dimension(MultiDegree({2, 2})), CutoffExceeded);
    EXPECT_THROW(g.hilbert_table(4), CutoffExceeded);
    EXPECT_THROW(g.is_q_central(power(FreeElement::generator(2, 0), 3)), CutoffExceeded);
}

TEST(Presentation, RejectsLinearRelations)
{
    EXPECT_THROW(plain(1, 2, {}, {"x(1)"}).evaluated_relations(), std::invalid_argument);
}

TEST(SerreConstructor, Examples)
{
    Presentation a2 = cartan_serre_presentation(cartan_braiding({{2, -1}, {-1, 2}}));
    ASSERT_EQ(a2.relations.size(), 2u);
    EXPECT_EQ(a2.relations[0].to_text(), "ad(1; x(2))^2");
    EXPECT_EQ(a2.relations[1].to_text(), "ad(2; x(1))^2");
    // orthogonal vertices: x_12 and x_21 are proportional, one is kept
    Presentation a1a1 = cartan_serre_presentation(cartan_braiding({{2, 0}, {0, 2}}));
    EXPECT_EQ(a1a1.relations.size(), 1u);
    Presentation b2 = cartan_serre_presentation(cartan_braiding({{4, -2}, {-2, 2}}));
    EXPECT_EQ(b2.relations[0].to_text(), "ad(1; x(2))^2");
    EXPECT_EQ(b2.relations[1].to_text(), "ad(2; x(1))^3");
    BraidingMatrix blocked = braiding(1, 2, {{1, 1, "t"}, {2, 2, "t"}, {1, 2, "t"}});
    EXPECT_THROW(cartan_serre_presentation(blocked), UndefinedCartanEntry);
}

TEST(Compose, RelationCountsAndBlockTables)
{
    CatalogEntry j2 = catalog_entry(ExceptionalType::SuperA3_J2);
    Presentation c = compose({j2.eminent, j2.eminent});
    EXPECT_EQ(c.rank(), 6);
    EXPECT_EQ(c.relations.size(), 4u + 4u + 9u);
    EXPECT_TRUE(c.braiding(0, 3).is_one());
    EXPECT_EQ(c.braiding(3, 4), j2.eminent.braiding(0, 1));

    CatalogEntry d1 = catalog_entry(ExceptionalType::D21a_1);
    // equal parameters are shared, clashing ones get the block suffix
    EXPECT_EQ(compose({d1.eminent, d1.eminent}).params.size(), 3u);
    CatalogEntry d2 = catalog_entry(ExceptionalType::D21a_2, 3, 3);
    Presentation cd = compose({d1.eminent, d2.eminent});
    std::vector<std::string> names;
    for (const auto& p : cd.params)
        names.push_back(p.name);
    EXPECT_EQ(names, (std::vector<std::string>{"q", "r", "s", "q_2", "s_2", "r_2"}));
    EXPECT_EQ(cd.evaluated_relations().size(), 17u);
}
