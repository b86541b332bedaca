#include "nichols/catalog.hpp"

#include "nichols/errors.hpp"

#include <numeric>
#include <sstream>

namespace nichols {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

PBWSpec parse_pbw_spec(const std::string& text)
{
    PBWSpec spec;
    std::size_t offset = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        std::string content = trim(line.substr(0, line.find('#')));
        if (content.empty())
            continue;
        auto colon = line.rfind(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'expr : height'", line_start);
        std::string expr = trim(line.substr(0, colon));
        std::string h = trim(line.substr(colon + 1, line.find('#', colon) - colon - 1));
        PBWGenerator g;
        try {
            g.expr = parse_rel_expr(expr);
        } catch (const ParseError& e) {
            throw ParseError(e.message(), line_start + line.find(expr) + e.position());
        }
        if (h == "inf" || h == "infinity") {
            g.height = std::nullopt;
        } else if (!h.empty() && h.find_first_not_of("0123456789") == std::string::npos && h.size() < 9) {
            g.height = std::stoi(h);
        } else {
            throw ParseError("height must be a nonnegative integer or 'inf'", line_start + colon + 1);
        }
        spec.push_back(std::move(g));
    }
    return spec;
}

std::string pbw_spec_to_text(const PBWSpec& spec)
{
    std::string out;
    for (const auto& g : spec)
        out += g.expr.to_text() + " : " + (g.height ? std::to_string(*g.height) : std::string("inf")) + "\n";
    return out;
}

std::vector<ExceptionalType> catalog_types()
{
    return {ExceptionalType::SuperA3_J2, ExceptionalType::SuperA3_J123, ExceptionalType::D21a_1,
            ExceptionalType::D21a_2, ExceptionalType::D21a_3};
}

Presentation make_presentation(const std::string& name, const GroundField& field, int theta,
                               const std::vector<std::pair<std::string, std::string>>& params,
                               const std::vector<std::tuple<int, int, std::string>>& entries,
                               const std::vector<std::string>& relations)
{
    if (theta < 1)
        throw std::invalid_argument("rank must be positive");
    Presentation p;
    p.name = name;
    p.braiding = BraidingMatrix(field, theta);
    EvalContext ctx;
    ctx.field = field;
    ctx.rank = theta;
    for (const auto& [pname, source] : params) {
        if (pname == field.transcendental || pname == "z" || pname == "x" || pname == "ad" || pname == "q_")
            throw std::invalid_argument("parameter name '" + pname + "' is reserved");
        Scalar v = parse_scalar(source, ctx);
        ctx.params[pname] = v;
        p.params.push_back({pname, source, v});
    }
    for (const auto& [i, j, source] : entries) {
        if (i < 1 || i > theta || j < 1 || j > theta)
            throw std::out_of_range("braiding entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of range");
        Scalar v = parse_scalar(source, ctx);
        if (v.is_zero())
            throw InvalidOperand("braiding entry (" + std::to_string(i) + "," + std::to_string(j) + ") is zero");
        p.braiding.set(i - 1, j - 1, v);
    }
    for (const auto& r : relations)
        p.relations.push_back(parse_rel_expr(r));
    return p;
}

namespace {

PBWSpec make_pbw(const std::vector<std::pair<std::string, std::optional<int>>>& items)
{
    PBWSpec spec;
    for (const auto& [e, h] : items)
        spec.push_back({parse_rel_expr(e), h});
    return spec;
}

constexpr auto inf = std::nullopt;

const char* kSeriesChainNum = "(1+t1*t2)*(1+t1*t2*t3)*(1+t2)*(1+t2*t3)";
const char* kSeriesChainDen = "(1-t1)*(1-t1*t2^2*t3)*(1-t3)";
const char* kSeriesTriangleNum = "(1+t1)*(1+t1*t2*t3)*(1+t2)*(1+t3)";
const char* kSeriesTriangleDen = "(1-t1*t2)*(1-t1*t3)*(1-t2*t3)";

// x3, x23, x2, x_{12^23}, x123, x12, x1 with x23, x2, x123, x12 of height 1.
PBWSpec chain_pbw()
{
    return make_pbw({{"x(3)", inf},
                     {"x(2,3)", 1},
                     {"x(2)", 1},
                     {"[x(1,2,3), x(2)]", inf},
                     {"x(1,2,3)", 1},
                     {"x(1,2)", 1},
                     {"x(1)", inf}});
}

const std::vector<std::string> kChainRelations = {"x(2)^2", "x(1,3)", "x(1,1,2)", "x(3,3,2)"};

// q —q^-1— (-1) —r^-1— r
const std::vector<std::tuple<int, int, std::string>> kChainEntries = {
    {1, 1, "q"}, {1, 2, "q^-1"}, {2, 2, "-1"}, {2, 3, "r^-1"}, {3, 3, "r"}};

void check_order(int k, const char* what)
{
    if (k < 2 || k > 64)
        throw std::invalid_argument(std::string(what) + " must lie in 2..64");
}

} // namespace

CatalogEntry catalog_entry(ExceptionalType type, int M, int L)
{
    CatalogEntry e;
    e.type = type;
    e.tag = to_string(type);
    std::string z_text;
    std::vector<std::string> relations;
    switch (type) {
    case ExceptionalType::SuperA3_J2:
        e.eminent = make_presentation(e.tag, {1, "t"}, 3, {},
                                      {{1, 1, "t"}, {1, 2, "t^-1"}, {2, 2, "-1"}, {2, 3, "t"}, {3, 3, "t^-1"}},
                                      kChainRelations);
        z_text = "[x(1,2,3), x(2)]";
        e.pbw = chain_pbw();
        e.series = RationalSeries::parse(kSeriesChainNum, kSeriesChainDen, 3);
        break;
    case ExceptionalType::SuperA3_J123:
        e.eminent = make_presentation(e.tag, {1, "t"}, 3, {},
                                      {{1, 1, "-1"}, {1, 2, "t"}, {2, 2, "-1"}, {2, 3, "t^-1"}, {3, 3, "-1"}},
                                      {"x(1)^2", "x(2)^2", "x(3)^2", "x(2,1,3)", "[x(1,2,3), x(2)]"});
        z_text = "x(1,3)";
        e.pbw = make_pbw({{"x(3)", 1},
                          {"x(2,3)", inf},
                          {"x(2)", 1},
                          {"x(1,3)", inf},
                          {"x(1,2,3)", 1},
                          {"x(1,2)", inf},
                          {"x(1)", 1}});
        e.series = RationalSeries::parse(kSeriesTriangleNum, kSeriesTriangleDen, 3);
        break;
    case ExceptionalType::D21a_1:
        check_order(M, "M");
        e.M = M;
        e.eminent = make_presentation(e.tag, {M, "t"}, 3, {{"q", "z"}, {"r", "t"}, {"s", "1/(z*t)"}},
                                      kChainEntries, kChainRelations);
        z_text = "x(1)^" + std::to_string(M);
        e.pbw = chain_pbw();
        e.series = RationalSeries::parse(kSeriesChainNum, kSeriesChainDen, 3);
        break;
    case ExceptionalType::D21a_2:
        check_order(L, "L");
        e.L = L;
        e.M = L;
        e.eminent = make_presentation(e.tag, {L, "t"}, 3, {{"q", "t"}, {"s", "z"}, {"r", "1/(z*t)"}},
                                      kChainEntries, kChainRelations);
        z_text = "[x(1,2,3), x(2)]^" + std::to_string(L);
        e.pbw = chain_pbw();
        e.series = RationalSeries::parse(kSeriesChainNum, kSeriesChainDen, 3);
        break;
    case ExceptionalType::D21a_3:
        check_order(M, "M");
        e.M = M;
        e.eminent = make_presentation(
            e.tag, {M, "t"}, 3, {{"q", "z"}, {"r", "t"}, {"s", "1/(z*t)"}},
            {{1, 1, "-1"}, {2, 2, "-1"}, {3, 3, "-1"}, {1, 2, "q"}, {1, 3, "r"}, {2, 3, "s"}},
            {"x(1)^2", "x(2)^2", "x(3)^2",
             "x(1,2,3) - q_(1,2)*(1 - s)*x(2)*x(1,3) - (1 - s)/(q_(3,2)*(1 - r))*[x(1,3), x(2)]"});
        z_text = "x(1,2)^" + std::to_string(M);
        e.pbw = make_pbw({{"x(3)", 1},
                          {"x(2,3)", inf},
                          {"x(2)", 1},
                          {"x(1,2,3)", 1},
                          {"x(1,3)", inf},
                          {"x(1,2)", inf},
                          {"x(1)", 1}});
        e.series = RationalSeries::parse(kSeriesTriangleNum, kSeriesTriangleDen, 3);
        break;
    case ExceptionalType::Other: throw std::invalid_argument("no catalog entry for type 'other'");
    }
    e.z = parse_rel_expr(z_text);
    e.z_degree = *e.eminent.evaluate(e.z).degree();
    e.nichols = e.eminent.with_relation(z_text);
    e.nichols.name = e.tag + "-nichols";
    return e;
}

CatalogEntry catalog_entry(const std::string& tag, std::optional<int> M, std::optional<int> L)
{
    auto type = exceptional_type_from_string(tag);
    if (!type || *type == ExceptionalType::Other)
        throw std::invalid_argument("unknown catalog tag '" + tag + "'");
    return catalog_entry(*type, M.value_or(3), L.value_or(2));
}

namespace {

// Coordinates of homogeneous elements over their common word set.
bool independent_of(const std::vector<FreeElement>& kept, const FreeElement& candidate)
{
    std::map<Word, int, WordLess> column;
    auto index_words = [&](const FreeElement& e) {
        for (const auto& [w, c] : e.terms())
            column.emplace(w, 0);
    };
    for (const auto& k : kept)
        index_words(k);
    index_words(candidate);
    int n = 0;
    for (auto& [w, idx] : column)
        idx = n++;
    auto row = [&](const FreeElement& e) {
        std::vector<Scalar> r(n, Scalar::zero(1));
        for (const auto& [w, c] : e.terms())
            r[column.at(w)] = c;
        return r;
    };
    std::vector<std::vector<Scalar>> rows;
    for (const auto& k : kept)
        rows.push_back(row(k));
    std::size_t before = row_reduce(rows, Execution::Serial).size();
    rows.push_back(row(candidate));
    return row_reduce(rows, Execution::Serial).size() > before;
}

} // namespace

Presentation cartan_serre_presentation(const BraidingMatrix& q, const std::string& name)
{
    Presentation p;
    p.name = name;
    p.braiding = q;
    std::map<MultiDegree, std::vector<FreeElement>> kept;
    EvalContext ctx = p.context();
    for (int i = 0; i < q.rank(); ++i)
        for (int j = 0; j < q.rank(); ++j) {
            if (i == j)
                continue;
            auto m = cartan_entry(q, i, j);
            if (!m)
                throw UndefinedCartanEntry(i, j);
            std::string text = "ad(" + std::to_string(i + 1) + "; x(" + std::to_string(j + 1) + "))^" +
                               std::to_string(*m + 1);
            RelExpr r = parse_rel_expr(text);
            FreeElement value = eval_rel_expr(r, ctx);
            if (value.is_zero())
                continue;
            auto& bucket = kept[*value.degree()];
            if (!independent_of(bucket, value))
                continue;
            bucket.push_back(value);
            p.relations.push_back(std::move(r));
        }
    return p;
}

Presentation compose(const std::vector<Presentation>& blocks, const std::string& name)
{
    if (blocks.empty())
        throw std::invalid_argument("compose needs at least one block");
    GroundField field = blocks.front().braiding.field();
    int theta = 0;
    for (const auto& b : blocks) {
        const GroundField& f = b.braiding.field();
        if (f.transcendental != field.transcendental)
            throw InvalidOperand("blocks use different transcendental names");
        if (f.M != field.M) {
            if (field.M == 1)
                field.M = f.M;
            else if (f.M != 1)
                throw InvalidOperand("blocks use different roots of unity");
        }
        theta += b.rank();
    }
    Presentation out;
    out.braiding = BraidingMatrix(field, theta);
    std::string joined;
    int offset = 0;
    std::vector<std::pair<int, int>> ranges;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const Presentation& b = blocks[k];
        joined += (k ? "+" : "") + b.name;
        for (int i = 0; i < b.rank(); ++i)
            for (int j = 0; j < b.rank(); ++j)
                out.braiding.set(offset + i, offset + j, b.braiding(i, j));
        std::map<std::string, std::string> rename;
        for (const auto& param : b.params) {
            auto clash = std::find_if(out.params.begin(), out.params.end(),
                                      [&](const NamedScalar& s) { return s.name == param.name; });
            if (clash == out.params.end()) {
                out.params.push_back(param);
            } else if (!(clash->value == param.value)) {
                NamedScalar renamed = param;
                renamed.name = param.name + "_" + std::to_string(k + 1);
                rename[param.name] = renamed.name;
                out.params.push_back(renamed);
            }
        }
        for (const auto& r : b.relations)
            out.relations.push_back(relabel(r, offset, rename));
        ranges.emplace_back(offset, offset + b.rank());
        offset += b.rank();
    }
    for (std::size_t a = 0; a < ranges.size(); ++a)
        for (int i = ranges[a].first; i < ranges[a].second; ++i)
            for (std::size_t b = a + 1; b < ranges.size(); ++b)
                for (int j = ranges[b].first; j < ranges[b].second; ++j)
                    out.relations.push_back(
                        parse_rel_expr("x(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"));
    out.name = name.empty() ? joined : name;
    return out;
}

} // namespace nichols
