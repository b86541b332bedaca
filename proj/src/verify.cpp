#include "nichols/verify.hpp"

#include "nichols/errors.hpp"

#include <functional>

namespace nichols {

using json = nlohmann::ordered_json;

std::string to_string(Report::Status status)
{
    switch (status) {
    case Report::Status::Pass: return "pass";
    case Report::Status::Fail: return "fail";
    case Report::Status::Presumed: return "presumed";
    }
    return "unknown";
}

json Report::to_json() const
{
    json j;
    j["check"] = check;
    j["target"] = target;
    j["status"] = to_string(status);
    j["details"] = details;
    j["witness"] = witness;
    if (!parts.empty()) {
        j["parts"] = json::array();
        for (const auto& p : parts)
            j["parts"].push_back(p.to_json());
    }
    return j;
}

json degree_json(const MultiDegree& d)
{
    return json(d.values());
}

json hilbert_table_json(const HilbertTable& table)
{
    json out = json::array();
    for (const auto& [d, n] : table)
        out.push_back({{"degree", degree_json(d)}, {"dim", n}});
    return out;
}

namespace {

Report make_report(std::string check, std::string target)
{
    Report r;
    r.check = std::move(check);
    r.target = std::move(target);
    return r;
}

Report::Status combine(const std::vector<Report>& parts)
{
    bool presumed = false;
    for (const auto& p : parts) {
        if (p.status == Report::Status::Fail)
            return Report::Status::Fail;
        presumed = presumed || p.status == Report::Status::Presumed;
    }
    return presumed ? Report::Status::Presumed : Report::Status::Pass;
}

const json* first_witness(const std::vector<Report>& parts)
{
    for (const auto& p : parts)
        if (!p.witness.is_null())
            return &p.witness;
    return nullptr;
}

int rank_of(const std::vector<FreeElement>& elems, const std::vector<Word>& basis)
{
    std::map<Word, int, WordLess> index;
    for (std::size_t k = 0; k < basis.size(); ++k)
        index[basis[k]] = static_cast<int>(k);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& e : elems) {
        std::vector<Scalar> row(basis.size(), Scalar::zero(1));
        for (const auto& [w, c] : e.terms())
            row[index.at(w)] = c;
        rows.push_back(std::move(row));
    }
    if (basis.empty())
        return 0;
    return static_cast<int>(row_reduce(std::move(rows), Execution::Serial).size());
}

json violation_json(const ConditionViolation& v)
{
    std::vector<int> vs;
    for (int x : v.vertices)
        vs.push_back(x + 1);
    return {{"kind", to_string(v.kind)}, {"vertices", vs}, {"description", v.description}};
}

json diagram_json(const BraidingMatrix& q)
{
    DynkinDiagram d = dynkin_diagram(q);
    const std::string& tr = q.field().transcendental;
    json labels = json::array();
    for (const auto& l : d.vertex_labels)
        labels.push_back(l.to_string(tr));
    json edges = json::array();
    for (const auto& e : d.edges)
        edges.push_back({{"vertices", {e.a + 1, e.b + 1}}, {"label", e.label.to_string(tr)}});
    return {{"vertex_labels", labels}, {"edges", edges}};
}

json roots_json(const RootSystemResult& r)
{
    json roots = json::array();
    for (const auto& a : r.roots)
        roots.push_back(degree_json(a));
    json j = {{"result", to_string(r.status)},
              {"count", r.roots.size()},
              {"objects", r.objects},
              {"morphisms", r.morphisms},
              {"cap", r.cap},
              {"roots", roots}};
    return j;
}

} // namespace

Report check_pbw(GradedQuotient& g, const Presentation& p, const PBWSpec& spec, int d)
{
    Report r = make_report("pbw", p.name);
    r.details["degree"] = d;
    const int n = g.rank();
    json gens = json::array();
    std::vector<FreeElement> elems;
    std::vector<MultiDegree> degs;
    for (const auto& gen : spec) {
        gens.push_back({{"generator", gen.expr.to_text()}, {"height", gen.height ? json(*gen.height) : json("inf")}});
        FreeElement e = p.evaluate(gen.expr);
        auto deg = e.degree();
        if (!deg || deg->is_zero()) {
            r.status = Report::Status::Fail;
            r.witness = {{"reason", "generator is zero or a scalar"}, {"generator", gen.expr.to_text()}};
            r.details["generators"] = gens;
            return r;
        }
        degs.push_back(*deg);
        elems.push_back(deg->total() <= d ? g.normal_form(e) : FreeElement(n));
    }
    r.details["generators"] = gens;

    std::map<MultiDegree, std::vector<FreeElement>> monomials;
    std::function<void(std::size_t, const MultiDegree&, const FreeElement&)> walk =
        [&](std::size_t k, const MultiDegree& deg, const FreeElement& value) {
            if (k == spec.size()) {
                monomials[deg].push_back(value);
                return;
            }
            walk(k + 1, deg, value);
            MultiDegree cur = deg;
            FreeElement v = value;
            for (int e = 1; !spec[k].height || e <= *spec[k].height; ++e) {
                cur += degs[k];
                if (cur.total() > d)
                    break;
                v = g.normal_form(v * elems[k]);
                walk(k + 1, cur, v);
            }
        };
    walk(0, MultiDegree(n), FreeElement::unit(n));

    long total = 0;
    for (const auto& a : multidegrees_up_to(n, d)) {
        const auto& basis = g.component_basis(a);
        auto it = monomials.find(a);
        std::vector<FreeElement> monos = it == monomials.end() ? std::vector<FreeElement>{} : it->second;
        total += static_cast<long>(monos.size());
        int dim = static_cast<int>(basis.size());
        int rk = rank_of(monos, basis);
        if (static_cast<int>(monos.size()) != dim || rk != dim) {
            r.status = Report::Status::Fail;
            r.witness = {{"degree", degree_json(a)},
                         {"dimension", dim},
                         {"monomials", monos.size()},
                         {"rank", rk}};
            break;
        }
    }
    r.details["monomials_checked"] = total;
    return r;
}

Report check_hilbert(GradedQuotient& g, const RationalSeries& s, int d)
{
    Report r = make_report("hilbert", "series " + s.to_string());
    r.details["degree"] = d;
    if (s.rank() != g.rank())
        throw std::invalid_argument("series and presentation have different ranks");
    SeriesTable expected = s.expand(d);
    auto all = multidegrees_up_to(g.rank(), d);
    long compared = 0;
    std::size_t k = 0;
    for (int level = 0; level <= d && r.passed(); ++level) {
        g.ensure_total(level);
        for (; k < all.size() && all[k].total() == level; ++k) {
            int dim = g.dimension(all[k]);
            const mpq_class& want = expected.at(all[k]);
            ++compared;
            if (want != dim) {
                r.status = Report::Status::Fail;
                r.witness = {{"degree", degree_json(all[k])}, {"expected", want.get_str()}, {"actual", dim}};
                break;
            }
        }
    }
    r.details["compared"] = compared;
    return r;
}

Report check_gkdim(const RationalSeries& s, int expected)
{
    Report r = make_report("gkdim", s.to_string());
    int got = gkdim_pole_order(s);
    r.details["pole_order"] = got;
    r.details["expected"] = expected;
    if (got != expected) {
        r.status = Report::Status::Fail;
        r.witness = {{"pole_order", got}};
    }
    return r;
}

Report check_relations_primitive(const Presentation& p, Execution exec)
{
    Report r = make_report("relations-primitive", p.name);
    auto rels = p.evaluated_relations();
    json rows = json::array();
    std::map<int, std::unique_ptr<GradedQuotient>> by_degree;
    for (std::size_t k = 0; k < rels.size(); ++k) {
        auto deg = rels[k].degree();
        if (!deg)
            continue;
        int total = deg->total();
        auto& gq = by_degree[total];
        if (!gq) {
            std::vector<FreeElement> lower;
            for (const auto& e : rels)
                if (auto d = e.degree(); d && d->total() < total)
                    lower.push_back(e);
            gq = std::make_unique<GradedQuotient>(p.braiding, lower, total, exec);
        }
        bool ok = gq->is_primitive(rels[k]);
        rows.push_back({{"relation", p.relations[k].to_text()}, {"degree", degree_json(*deg)}, {"primitive", ok}});
        if (!ok && r.passed()) {
            r.status = Report::Status::Fail;
            r.witness = {{"relation", p.relations[k].to_text()},
                         {"defect", gq->reduced_defect(rels[k]).to_string(p.braiding.field().transcendental)}};
        }
    }
    r.details["relations"] = rows;
    return r;
}

Report check_eminent_gap(const CatalogEntry& entry, int d, Execution exec)
{
    Report r = make_report("eminent-gap", entry.tag);
    FreeElement z = entry.eminent.evaluate(entry.z);
    auto dz = z.degree();
    if (!dz)
        throw std::invalid_argument("z evaluates to zero in the free algebra");
    if (dz->total() + 1 > d)
        throw CutoffExceeded("eminent gap check needs degree >= " + std::to_string(dz->total() + 1));
    r.details = {{"degree", d}, {"z", entry.z.to_text()}, {"z_degree", degree_json(*dz)}};
    const std::string& tr = entry.eminent.braiding.field().transcendental;

    GradedQuotient em(entry.eminent, d, exec);

    Report nonzero = make_report("z-nonzero", entry.tag);
    if (em.is_zero(z)) {
        nonzero.status = Report::Status::Fail;
        nonzero.witness = {{"reason", "z lies in the eminent ideal"}};
    }

    Report primitive = make_report("z-primitive", entry.tag);
    TensorElement defect = em.reduced_defect(z);
    if (!defect.is_zero()) {
        primitive.status = Report::Status::Fail;
        primitive.witness = {{"defect", defect.to_string(tr)}};
    }

    Report central = make_report("z-q-central", entry.tag);
    auto cdefects = em.centrality_defects(z);
    for (std::size_t i = 0; i < cdefects.size(); ++i)
        if (!cdefects[i].is_zero()) {
            central.status = Report::Status::Fail;
            central.witness = {{"generator", i + 1}, {"defect", cdefects[i].to_string(tr)}};
            break;
        }

    auto em_rels = entry.eminent.evaluated_relations();
    em_rels.push_back(z);
    GradedQuotient by_z(entry.eminent.braiding, em_rels, d, exec);
    GradedQuotient nichols(entry.nichols, d, exec);
    HilbertTable h_by_z = by_z.hilbert_table(d);
    HilbertTable h_nichols = nichols.hilbert_table(d);
    Report quotient = make_report("quotient-by-z", entry.tag);
    for (const auto& [a, n] : h_nichols)
        if (h_by_z.at(a) != n) {
            quotient.status = Report::Status::Fail;
            quotient.witness = {{"degree", degree_json(a)}, {"eminent_mod_z", h_by_z.at(a)}, {"nichols", n}};
            break;
        }

    Report factor = make_report("extension-factorization", entry.tag);
    HilbertTable h_em = em.hilbert_table(d);
    SeriesTable predicted = convolve(to_series_table(h_nichols), RationalSeries::geometric(*dz).expand(d), d);
    for (const auto& [a, n] : h_em) {
        auto it = predicted.find(a);
        mpq_class want = it == predicted.end() ? mpq_class(0) : it->second;
        if (want != n) {
            factor.status = Report::Status::Fail;
            factor.witness = {{"degree", degree_json(a)}, {"eminent", n}, {"nichols_times_z", want.get_str()}};
            break;
        }
    }

    r.parts = {nonzero, primitive, central, quotient, factor};
    r.status = combine(r.parts);
    if (const json* w = first_witness(r.parts))
        r.witness = *w;
    return r;
}

namespace {

Report diagram_part(const BraidingMatrix& m, const std::string& name, int cap)
{
    Report part = make_report("obstruction-part", name);
    part.details["diagram"] = diagram_json(m);
    auto violations = check_necessary_conditions(m);
    json vs = json::array();
    for (const auto& v : violations)
        vs.push_back(violation_json(v));
    part.details["violations"] = vs;
    RootSystemResult roots = positive_roots(m, cap);
    part.details["roots"] = roots_json(roots);
    if (!violations.empty()) {
        part.status = Report::Status::Fail;
        part.witness = violation_json(violations.front());
    } else if (roots.status == RootSystemResult::Status::UndefinedM) {
        part.status = Report::Status::Fail;
        part.witness = {{"undefined_m", {roots.witness->first + 1, roots.witness->second + 1}},
                        {"reflections", roots.witness_path}};
    } else if (roots.status == RootSystemResult::Status::Inconsistent) {
        part.status = Report::Status::Fail;
        part.witness = {{"mixed_sign_root", degree_json(*roots.mixed_root)}, {"reflections", roots.witness_path}};
    } else if (roots.status == RootSystemResult::Status::Diverged) {
        part.status = Report::Status::Presumed;
        part.witness = {{"diverged", true}, {"cap", cap}};
    }
    return part;
}

} // namespace

Report obstruction_report(const BraidingMatrix& q, const MultiDegree& beta, int cap)
{
    Report r = make_report("obstruction", "beta=" + beta.to_string());
    BraidingMatrix w = extend_by_root(q, beta);
    const int b = w.rank() - 1;
    r.details["cap"] = cap;
    r.details["q_beta_beta"] = w(b, b).to_string(q.field().transcendental);
    r.parts.push_back(diagram_part(w, "W", cap));
    for (int i = 0; i < b; ++i) {
        r.parts.push_back(diagram_part(w.restricted({i, b}), "{" + std::to_string(i + 1) + ",beta}", cap));
        for (int j = i + 1; j < b; ++j)
            r.parts.push_back(diagram_part(w.restricted({i, j, b}),
                                           "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ",beta}",
                                           cap));
    }
    r.status = combine(r.parts);
    r.details["verdict"] = r.passed() ? "UNOBSTRUCTED" : "OBSTRUCTED";
    for (const auto& p : r.parts)
        if (p.status == r.status && !p.witness.is_null()) {
            r.witness = p.witness;
            r.witness["subdiagram"] = p.target;
            break;
        }
    return r;
}

Report diagram_report(const BraidingMatrix& q, bool include_remark)
{
    Report r = make_report("diagram", "rank " + std::to_string(q.rank()));
    r.details["diagram"] = diagram_json(q);
    r.details["rendered"] = dynkin_diagram(q).render();
    r.details["type"] = to_string(recognize_exceptional_type(q).type);
    auto violations = check_necessary_conditions(q);
    if (include_remark) {
        auto extra = check_triangle_remark(q);
        violations.insert(violations.end(), extra.begin(), extra.end());
    }
    json vs = json::array();
    for (const auto& v : violations)
        vs.push_back(violation_json(v));
    r.details["violations"] = vs;
    if (!violations.empty()) {
        r.status = Report::Status::Fail;
        r.witness = violation_json(violations.front());
    }
    return r;
}

Report roots_report(const BraidingMatrix& q, int cap)
{
    Report r = make_report("roots", "rank " + std::to_string(q.rank()));
    RootSystemResult roots = positive_roots(q, cap);
    r.details = roots_json(roots);
    if (roots.status == RootSystemResult::Status::UndefinedM) {
        r.status = Report::Status::Fail;
        r.witness = {{"undefined_m", {roots.witness->first + 1, roots.witness->second + 1}},
                     {"reflections", roots.witness_path}};
    } else if (roots.status == RootSystemResult::Status::Inconsistent) {
        r.status = Report::Status::Fail;
        r.witness = {{"mixed_sign_root", degree_json(*roots.mixed_root)}, {"reflections", roots.witness_path}};
    } else if (roots.status == RootSystemResult::Status::Diverged) {
        r.status = Report::Status::Presumed;
        r.witness = {{"diverged", true}, {"cap", cap}};
    }
    return r;
}

} // namespace nichols
