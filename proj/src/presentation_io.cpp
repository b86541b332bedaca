#include "nichols/presentation_io.hpp"

#include "nichols/errors.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace nichols {

namespace {

struct Line {
    std::string text;   // comment stripped, trimmed
    std::size_t offset; // byte offset of text[0] in the file
};

struct Section {
    std::string name;
    std::size_t offset;
    std::vector<Line> lines;
};

std::vector<Section> split_sections(const std::string& src)
{
    std::vector<Section> sections;
    std::size_t pos = 0;
    while (pos <= src.size()) {
        std::size_t end = src.find('\n', pos);
        if (end == std::string::npos)
            end = src.size();
        std::string raw = src.substr(pos, end - pos);
        raw = raw.substr(0, raw.find('#'));
        std::size_t b = raw.find_first_not_of(" \t\r");
        if (b != std::string::npos) {
            std::size_t e = raw.find_last_not_of(" \t\r");
            Line line{raw.substr(b, e - b + 1), pos + b};
            // relations and PBW lines may start with a bracket too
            static const std::regex header(R"(\[\s*([A-Za-z_]+)\s*\])");
            std::smatch m;
            if (std::regex_match(line.text, m, header)) {
                sections.push_back({m[1].str(), line.offset, {}});
            } else {
                if (sections.empty())
                    throw ParseError("content before the first section header", line.offset);
                sections.back().lines.push_back(line);
            }
        }
        pos = end + 1;
    }
    return sections;
}

struct KeyValue {
    std::string key;
    std::string value;
    std::size_t value_offset;
};

KeyValue key_value(const Line& line)
{
    auto eq = line.text.find('=');
    if (eq == std::string::npos)
        throw ParseError("expected 'key = value'", line.offset);
    KeyValue kv;
    std::string key = line.text.substr(0, eq);
    kv.key = key.substr(0, key.find_last_not_of(" \t") + 1);
    std::size_t vb = line.text.find_first_not_of(" \t", eq + 1);
    if (vb == std::string::npos)
        throw ParseError("missing value", line.offset + eq + 1);
    kv.value = line.text.substr(vb);
    kv.value_offset = line.offset + vb;
    if (kv.value.size() >= 2 && kv.value.front() == '"' && kv.value.back() == '"') {
        kv.value = kv.value.substr(1, kv.value.size() - 2);
        kv.value_offset += 1;
    }
    return kv;
}

int parse_int(const KeyValue& kv)
{
    if (kv.value.empty() || kv.value.size() > 9 || kv.value.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a positive integer for '" + kv.key + "'", kv.value_offset);
    return std::stoi(kv.value);
}

template <class F>
auto at_offset(std::size_t offset, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(e.message(), offset + e.position());
    } catch (const std::exception& e) {
        throw ParseError(e.what(), offset);
    }
}

std::string unquote(const std::string& s)
{
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

PBWSpec pbw_from_lines(const std::vector<Line>& lines)
{
    PBWSpec spec;
    for (const auto& l : lines) {
        PBWSpec one = at_offset(l.offset, [&] { return parse_pbw_spec(l.text); });
        spec.insert(spec.end(), one.begin(), one.end());
    }
    return spec;
}

} // namespace

PresentationFile parse_presentation_file(const std::string& text)
{
    auto sections = split_sections(text);
    auto find = [&](const std::string& name) -> const Section* {
        const Section* found = nullptr;
        for (const auto& s : sections) {
            if (s.name != name)
                continue;
            if (found)
                throw ParseError("duplicate section [" + name + "]", s.offset);
            found = &s;
        }
        return found;
    };
    for (const auto& s : sections) {
        static const std::vector<std::string> known = {"presentation", "field", "params", "braiding",
                                                       "relations", "pbw", "series"};
        if (std::find(known.begin(), known.end(), s.name) == known.end())
            throw ParseError("unknown section [" + s.name + "]", s.offset);
    }

    PresentationFile out;
    Presentation& p = out.presentation;
    p.name = "unnamed";
    if (const Section* s = find("presentation"))
        for (const auto& l : s->lines) {
            KeyValue kv = key_value(l);
            if (kv.key != "name")
                throw ParseError("unknown key '" + kv.key + "'", l.offset);
            p.name = kv.value;
        }

    GroundField field;
    if (const Section* s = find("field"))
        for (const auto& l : s->lines) {
            KeyValue kv = key_value(l);
            if (kv.key == "M") {
                field.M = parse_int(kv);
                if (field.M < 1)
                    throw ParseError("M must be positive", kv.value_offset);
            } else if (kv.key == "transcendental") {
                static const std::regex ident("[A-Za-z][A-Za-z0-9]*");
                if (!std::regex_match(kv.value, ident) || kv.value == "z" || kv.value == "x" || kv.value == "ad")
                    throw ParseError("invalid transcendental name", kv.value_offset);
                field.transcendental = kv.value;
            } else {
                throw ParseError("unknown key '" + kv.key + "'", l.offset);
            }
        }

    EvalContext ctx;
    ctx.field = field;
    if (const Section* s = find("params"))
        for (const auto& l : s->lines) {
            KeyValue kv = key_value(l);
            static const std::regex ident("[A-Za-z][A-Za-z0-9_]*");
            if (!std::regex_match(kv.key, ident) || kv.key == "z" || kv.key == "x" || kv.key == "ad" ||
                kv.key == "q_" || kv.key == field.transcendental)
                throw ParseError("invalid parameter name '" + kv.key + "'", l.offset);
            Scalar v = at_offset(kv.value_offset, [&] { return parse_scalar(kv.value, ctx); });
            ctx.params[kv.key] = v;
            p.params.push_back({kv.key, kv.value, v});
        }

    const Section* braiding = find("braiding");
    if (!braiding)
        throw ParseError("missing [braiding] section", text.size());
    int theta = 0;
    std::vector<std::pair<KeyValue, std::size_t>> entries;
    static const std::regex entry_key(R"(q_?\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    for (const auto& l : braiding->lines) {
        KeyValue kv = key_value(l);
        if (kv.key == "theta") {
            theta = parse_int(kv);
            if (theta < 1)
                throw ParseError("theta must be positive", kv.value_offset);
        } else if (std::regex_match(kv.key, entry_key)) {
            entries.emplace_back(kv, l.offset);
        } else {
            throw ParseError("unknown key '" + kv.key + "'", l.offset);
        }
    }
    if (theta == 0)
        throw ParseError("[braiding] needs theta", braiding->offset);
    p.braiding = BraidingMatrix(field, theta);
    ctx.rank = theta;
    for (const auto& [kv, line_offset] : entries) {
        std::smatch m;
        std::regex_match(kv.key, m, entry_key);
        int i = std::stoi(m[1]), j = std::stoi(m[2]);
        if (i < 1 || j < 1 || i > theta || j > theta)
            throw ParseError("entry index out of range", line_offset);
        Scalar v = at_offset(kv.value_offset, [&] { return parse_scalar(kv.value, ctx); });
        if (v.is_zero())
            throw ParseError("braiding entries must be nonzero", kv.value_offset);
        p.braiding.set(i - 1, j - 1, v);
    }

    if (const Section* s = find("relations"))
        for (const auto& l : s->lines) {
            std::string body = unquote(l.text);
            std::size_t shift = body.size() == l.text.size() ? 0 : 1;
            p.relations.push_back(at_offset(l.offset + shift, [&] { return parse_rel_expr(body); }));
        }
    // evaluate once so that bad indices and inhomogeneity surface here
    for (std::size_t k = 0; k < p.relations.size(); ++k) {
        const auto& lines = find("relations")->lines;
        at_offset(lines[k].offset, [&] { return p.evaluate(p.relations[k]); });
    }

    if (const Section* s = find("pbw"))
        out.pbw = pbw_from_lines(s->lines);

    if (const Section* s = find("series")) {
        std::optional<KeyValue> num, den;
        for (const auto& l : s->lines) {
            KeyValue kv = key_value(l);
            if (kv.key == "numerator")
                num = kv;
            else if (kv.key == "denominator")
                den = kv;
            else
                throw ParseError("unknown key '" + kv.key + "'", l.offset);
        }
        if (!num || !den)
            throw ParseError("[series] needs numerator and denominator", s->offset);
        IntPoly n = at_offset(num->value_offset, [&] { return parse_int_poly(num->value, theta); });
        IntPoly d = at_offset(den->value_offset, [&] { return parse_int_poly(den->value, theta); });
        out.series = at_offset(den->value_offset, [&] { return RationalSeries(n, d); });
    }
    return out;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PresentationFile load_presentation_file(const std::string& path)
{
    return parse_presentation_file(read_text_file(path));
}

std::string format_presentation_file(const Presentation& p, const PBWSpec* pbw, const RationalSeries* series)
{
    const GroundField& f = p.braiding.field();
    const std::string& tr = f.transcendental;
    std::ostringstream out;
    out << "[presentation]\nname = " << p.name << "\n\n";
    out << "[field]\nM = " << f.M << "\ntranscendental = " << tr << "\n\n";
    if (!p.params.empty()) {
        out << "[params]\n";
        for (const auto& s : p.params)
            out << s.name << " = \"" << s.value.to_string(tr) << "\"\n";
        out << "\n";
    }
    out << "[braiding]\ntheta = " << p.rank() << "\n";
    for (int i = 0; i < p.rank(); ++i)
        for (int j = 0; j < p.rank(); ++j)
            if (!p.braiding(i, j).is_one())
                out << "q(" << i + 1 << "," << j + 1 << ") = \"" << p.braiding(i, j).to_string(tr) << "\"\n";
    out << "\n[relations]\n";
    for (const auto& r : p.relations)
        out << r.to_text() << "\n";
    if (pbw) {
        out << "\n[pbw]\n" << pbw_spec_to_text(*pbw);
    }
    if (series) {
        out << "\n[series]\nnumerator = \"" << series->numerator().to_string() << "\"\ndenominator = \""
            << series->denominator().to_string() << "\"\n";
    }
    return out.str();
}

PBWSpec load_pbw_file(const std::string& path)
{
    std::string text = read_text_file(path);
    if (text.find("[pbw]") != std::string::npos) {
        for (const auto& s : split_sections(text))
            if (s.name == "pbw")
                return pbw_from_lines(s.lines);
    }
    return parse_pbw_spec(text);
}

RationalSeries load_series_file(const std::string& path, int rank)
{
    std::string text = read_text_file(path);
    std::vector<Line> lines;
    if (text.find("[series]") != std::string::npos) {
        for (const auto& s : split_sections(text))
            if (s.name == "series")
                lines = s.lines;
        std::string num, den;
        for (const auto& l : lines) {
            KeyValue kv = key_value(l);
            if (kv.key == "numerator")
                num = kv.value;
            else if (kv.key == "denominator")
                den = kv.value;
        }
        return RationalSeries::parse(num, den, rank);
    }
    std::istringstream in(text);
    std::string num, den, line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        auto e = line.find_last_not_of(" \t\r");
        (num.empty() ? num : den) = unquote(line.substr(b, e - b + 1));
    }
    return RationalSeries::parse(num, den, rank);
}

} // namespace nichols
