#pragma once

#include "nichols/catalog.hpp"
#include "nichols/weyl.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nichols {

struct Report {
    enum class Status { Pass, Fail, Presumed };

    std::string check;
    std::string target;
    Status status = Status::Pass;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    nlohmann::ordered_json witness; // null unless something failed
    std::vector<Report> parts;

    bool passed() const { return status == Status::Pass; }
    nlohmann::ordered_json to_json() const;
};

std::string to_string(Report::Status status);

nlohmann::ordered_json degree_json(const MultiDegree& d);
/// [{degree: [...], dim: n}, ...] in multidegree order.
nlohmann::ordered_json hilbert_table_json(const HilbertTable& table);

/// Ordered PBW monomials (exponents within heights) of every multidegree of
/// total degree <= d, reduced to normal form, must be independent and as
/// many as the component dimension. Reports the first failing multidegree.
Report check_pbw(GradedQuotient& g, const Presentation& p, const PBWSpec& spec, int d);

/// Compares the series expansion with the dimensions level by level and
/// stops at the first total degree that disagrees.
Report check_hilbert(GradedQuotient& g, const RationalSeries& s, int d);

Report check_gkdim(const RationalSeries& s, int expected);

/// Each relation primitive modulo the relations of strictly smaller total
/// degree.
Report check_relations_primitive(const Presentation& p, Execution exec = Execution::Parallel);

/// z nonzero, primitive and q-central in the eminent quotient; eminent plus z
/// gives the Nichols table; H_eminent = H_Nichols / (1 - t^deg z). Needs
/// d >= |deg z| + 1 (CutoffExceeded otherwise).
Report check_eminent_gap(const CatalogEntry& entry, int d, Execution exec = Execution::Parallel);

/// W = V + k x_beta: necessary conditions and root enumeration on W and on
/// every subdiagram of at most three vertices containing beta. Pass means
/// unobstructed; Fail means a violation or an undefined m_ij; Presumed means
/// only divergence at the cap was seen.
Report obstruction_report(const BraidingMatrix& q, const MultiDegree& beta, int cap = 500);

/// Necessary-condition check on a braiding, as a report.
Report diagram_report(const BraidingMatrix& q, bool include_remark = false);

Report roots_report(const BraidingMatrix& q, int cap = 500);

} // namespace nichols
