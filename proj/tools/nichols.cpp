#include "nichols/catalog.hpp"
#include "nichols/errors.hpp"
#include "nichols/presentation_io.hpp"
#include "nichols/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace nichols;
using json = nlohmann::ordered_json;

namespace {

/// A parse failure tied to the text it happened in, so the span can be shown.
struct InputError : std::runtime_error {
    InputError(const std::string& what, std::string label, std::string source, std::size_t pos)
        : std::runtime_error(what), label(std::move(label)), source(std::move(source)), pos(pos) {}
    std::string label;
    std::string source;
    std::size_t pos;
};

template <class F>
auto with_source(const std::string& label, const std::string& source, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw InputError(e.message(), label, source, e.position());
    }
}

void print_span(std::ostream& os, const InputError& e)
{
    std::size_t pos = std::min(e.pos, e.source.size());
    std::size_t line_start = e.source.rfind('\n', pos == 0 ? 0 : pos - 1);
    line_start = (line_start == std::string::npos || pos == 0) ? 0 : line_start + 1;
    if (pos > 0 && e.source[pos - 1] == '\n')
        line_start = pos;
    std::size_t line_end = e.source.find('\n', line_start);
    if (line_end == std::string::npos)
        line_end = e.source.size();
    int line = 1 + static_cast<int>(std::count(e.source.begin(), e.source.begin() + line_start, '\n'));
    std::size_t col = pos - line_start;
    os << "error: " << e.what() << "\n"
       << "  --> " << e.label << ": line " << line << ", column " << col + 1 << " (offset " << e.pos << ")\n"
       << "   | " << e.source.substr(line_start, line_end - line_start) << "\n"
       << "   | " << std::string(col, ' ') << "^\n";
}

struct Input {
    Presentation presentation;
    std::optional<PBWSpec> pbw;
    std::optional<RationalSeries> series;
};

std::optional<int> opt(int v)
{
    return v > 0 ? std::optional<int>(v) : std::nullopt;
}

/// Catalog tag (optionally suffixed "-nichols") or path to a presentation file.
Input load_input(const std::string& arg, int M, int L)
{
    std::string tag = arg;
    bool nichols = false;
    const std::string suffix = "-nichols";
    if (tag.size() > suffix.size() && tag.ends_with(suffix)) {
        tag.resize(tag.size() - suffix.size());
        nichols = true;
    }
    if (exceptional_type_from_string(tag)) {
        CatalogEntry e = catalog_entry(tag, opt(M), opt(L));
        if (nichols)
            return {e.nichols, std::nullopt, std::nullopt};
        return {e.eminent, e.pbw, e.series};
    }
    std::string text = read_text_file(arg);
    PresentationFile f = with_source(arg, text, [&] { return parse_presentation_file(text); });
    return {std::move(f.presentation), std::move(f.pbw), std::move(f.series)};
}

FreeElement evaluate_expr(const Presentation& p, const std::string& expr)
{
    return with_source("--expr", expr, [&] { return p.evaluate(parse_rel_expr(expr)); });
}

int emit(const Report& r)
{
    std::cout << r.to_json().dump(2) << "\n";
    return r.passed() ? 0 : 1;
}

int emit(const json& j)
{
    std::cout << j.dump(2) << "\n";
    return 0;
}

void print_table(const HilbertTable& table)
{
    int level = -1;
    for (const auto& [a, n] : table) {
        if (a.total() != level) {
            level = a.total();
            std::cout << "degree " << level << ":\n";
        }
        if (n != 0)
            std::cout << "  " << a.to_string() << "  " << n << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with pre-Nichols algebras of diagonal type"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string input, expr, spec_path, series_path, tag2;
    int degree = 8, cap = 500, M = 0, L = 0;
    bool text = false, remark = false, serial = false;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "catalog tag or presentation file")->required();
        sub->add_option("--M", M, "root of unity order for D21a-4.1 / D21a-4.3");
        sub->add_option("--L", L, "root of unity order for D21a-4.2");
    };

    auto* diagram = app.add_subcommand("diagram", "Dynkin diagram and necessary conditions");
    add_input(diagram);
    diagram->add_flag("--remark", remark, "also run the extra triangle conditions");
    diagram->add_flag("--text", text, "print the diagram instead of JSON");

    auto* roots = app.add_subcommand("roots", "positive roots via the Weyl groupoid");
    add_input(roots);
    roots->add_option("--cap", cap, "root and object limit")->check(CLI::PositiveNumber);

    auto* obstruct = app.add_subcommand("obstruction", "extend by a degree beta and test the result");
    add_input(obstruct);
    std::vector<int> beta;
    obstruct->add_option("--beta", beta, "multidegree, e.g. --beta 2 1")->required()->delimiter(',');
    obstruct->add_option("--cap", cap, "root and object limit")->check(CLI::PositiveNumber);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert table, optionally compared with a series");
    add_input(hilbert);
    hilbert->add_option("--degree", degree, "total degree bound")->required()->check(CLI::NonNegativeNumber);
    hilbert->add_option("--series", series_path, "series file");
    hilbert->add_flag("--text", text, "print a table instead of JSON");

    auto* pbw = app.add_subcommand("pbw", "check a PBW basis");
    add_input(pbw);
    pbw->add_option("--spec", spec_path, "PBW spec file (default: the input's own)");
    pbw->add_option("--degree", degree, "total degree bound")->required()->check(CLI::NonNegativeNumber);

    auto* primitive = app.add_subcommand("primitive", "is an element primitive in the quotient");
    add_input(primitive);
    primitive->add_option("--expr", expr, "relation DSL")->required();

    auto* central = app.add_subcommand("central", "is an element q-central in the quotient");
    add_input(central);
    central->add_option("--expr", expr, "relation DSL")->required();

    auto* eminent = app.add_subcommand("eminent", "full eminent gap report for a catalog entry");
    eminent->add_option("tag", input, "catalog tag")->required();
    eminent->add_option("--M", M, "root of unity order for D21a-4.1 / D21a-4.3");
    eminent->add_option("--L", L, "root of unity order for D21a-4.2");
    eminent->add_option("--degree", degree, "total degree bound")->required();

    auto* compose_cmd = app.add_subcommand("compose", "disjoint union of two catalog entries");
    compose_cmd->add_option("tag1", input, "first catalog tag")->required();
    compose_cmd->add_option("tag2", tag2, "second catalog tag")->required();
    compose_cmd->add_option("--M", M, "root of unity order for D21a-4.1 / D21a-4.3");
    compose_cmd->add_option("--L", L, "root of unity order for D21a-4.2");
    compose_cmd->add_option("--degree", degree, "total degree bound")->required()->check(CLI::NonNegativeNumber);

    auto* parse = app.add_subcommand("parse", "print the syntax tree of a DSL expression");
    parse->add_option("--expr", expr, "relation DSL")->required();

    auto* dump = app.add_subcommand("dump", "write an input in the presentation file format");
    add_input(dump);

    app.add_flag("--serial", serial, "use the serial reference kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const Execution exec = serial ? Execution::Serial : Execution::Parallel;

    try {
        if (*parse) {
            RelExpr e = with_source("--expr", expr, [&] { return parse_rel_expr(expr); });
            std::cout << e.dump();
            return 0;
        }
        if (*eminent) {
            CatalogEntry e = catalog_entry(input, opt(M), opt(L));
            return emit(check_eminent_gap(e, degree, exec));
        }
        if (*compose_cmd) {
            CatalogEntry a = catalog_entry(input, opt(M), opt(L));
            CatalogEntry b = catalog_entry(tag2, opt(M), opt(L));
            Presentation c = compose({a.eminent, b.eminent});
            GradedQuotient gc(c, degree, exec);
            GradedQuotient ga(a.eminent, degree, exec);
            GradedQuotient gb(b.eminent, degree, exec);
            HilbertTable hc = gc.hilbert_table(degree);
            SeriesTable expected =
                block_convolve(to_series_table(ga.hilbert_table(degree)), to_series_table(gb.hilbert_table(degree)), degree);
            Report r;
            r.check = "compose";
            r.target = c.name;
            r.details["degree"] = degree;
            r.details["relations"] = c.relations.size();
            for (const auto& [deg, n] : hc) {
                auto it = expected.find(deg);
                mpq_class want = it == expected.end() ? mpq_class(0) : it->second;
                if (want != n) {
                    r.status = Report::Status::Fail;
                    r.witness = {{"degree", degree_json(deg)}, {"composed", n}, {"block_product", want.get_str()}};
                    break;
                }
            }
            r.details["hilbert"] = hilbert_table_json(hc);
            return emit(r);
        }

        Input in = load_input(input, M, L);
        const Presentation& p = in.presentation;

        if (*diagram) {
            if (text) {
                std::cout << dynkin_diagram(p.braiding).render() << "\n";
                return 0;
            }
            return emit(diagram_report(p.braiding, remark));
        }
        if (*roots)
            return emit(roots_report(p.braiding, cap));
        if (*obstruct) {
            if (static_cast<int>(beta.size()) != p.rank())
                throw std::invalid_argument("--beta needs " + std::to_string(p.rank()) + " entries");
            MultiDegree b(beta);
            if (!b.is_nonnegative() || b.is_zero())
                throw std::invalid_argument("--beta must be nonzero and nonnegative");
            return emit(obstruction_report(p.braiding, b, cap));
        }
        if (*hilbert) {
            GradedQuotient g(p, degree, exec);
            if (!series_path.empty()) {
                std::string src = read_text_file(series_path);
                RationalSeries s =
                    with_source(series_path, src, [&] { return load_series_file(series_path, p.rank()); });
                return emit(check_hilbert(g, s, degree));
            }
            HilbertTable table = g.hilbert_table(degree);
            if (text) {
                print_table(table);
                return 0;
            }
            return emit(json{{"target", p.name}, {"degree", degree}, {"hilbert", hilbert_table_json(table)}});
        }
        if (*pbw) {
            PBWSpec spec;
            if (!spec_path.empty()) {
                std::string src = read_text_file(spec_path);
                spec = with_source(spec_path, src, [&] { return load_pbw_file(spec_path); });
            } else if (in.pbw) {
                spec = *in.pbw;
            } else {
                throw std::invalid_argument("no PBW spec: pass --spec");
            }
            GradedQuotient g(p, degree, exec);
            return emit(check_pbw(g, p, spec, degree));
        }
        if (*primitive || *central) {
            FreeElement u = evaluate_expr(p, expr);
            auto deg = u.degree();
            if (!deg || deg->is_zero())
                throw std::invalid_argument("expression must have positive degree");
            const std::string& tr = p.braiding.field().transcendental;
            Report r;
            r.target = expr;
            r.details["degree"] = degree_json(*deg);
            if (*primitive) {
                r.check = "primitive";
                GradedQuotient g(p, deg->total(), exec);
                TensorElement d = g.reduced_defect(u);
                r.details["zero"] = g.is_zero(u);
                if (!d.is_zero()) {
                    r.status = Report::Status::Fail;
                    r.witness = {{"defect", d.to_string(tr)}};
                }
            } else {
                r.check = "q-central";
                GradedQuotient g(p, deg->total() + 1, exec);
                auto defects = g.centrality_defects(u);
                for (std::size_t i = 0; i < defects.size(); ++i)
                    if (!defects[i].is_zero()) {
                        r.status = Report::Status::Fail;
                        r.witness = {{"generator", i + 1}, {"defect", defects[i].to_string(tr)}};
                        break;
                    }
            }
            return emit(r);
        }
        if (*dump) {
            std::cout << format_presentation_file(p, in.pbw ? &*in.pbw : nullptr, in.series ? &*in.series : nullptr);
            return 0;
        }
    } catch (const InputError& e) {
        print_span(std::cerr, e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
