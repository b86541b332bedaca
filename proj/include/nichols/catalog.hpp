#pragma once

#include "nichols/quotient.hpp"
#include "nichols/series.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace nichols {

struct PBWGenerator {
    RelExpr expr;
    std::optional<int> height; // largest allowed exponent; nullopt = unbounded
};
using PBWSpec = std::vector<PBWGenerator>;

/// Lines "expr : height" with height a nonnegative integer or "inf".
PBWSpec parse_pbw_spec(const std::string& text);
std::string pbw_spec_to_text(const PBWSpec& spec);

struct CatalogEntry {
    ExceptionalType type;
    std::string tag;
    int M = 1;
    int L = 1;
    Presentation eminent;
    Presentation nichols; // eminent relations plus z
    RelExpr z;
    MultiDegree z_degree;
    PBWSpec pbw;
    RationalSeries series; // Hilbert series of the eminent algebra
};

std::vector<ExceptionalType> catalog_types();

/// M is the order of the root of unity for D21a-4.1 / D21a-4.3, L for
/// D21a-4.2; both are ignored elsewhere. Throws std::invalid_argument for
/// other tags or orders below 2.
CatalogEntry catalog_entry(ExceptionalType type, int M = 3, int L = 2);
CatalogEntry catalog_entry(const std::string& tag, std::optional<int> M = std::nullopt,
                           std::optional<int> L = std::nullopt);

/// Builds a presentation from literal text: params are evaluated in order
/// (each may use earlier ones), then entries q(i,j) (1-based; missing ones
/// are 1), then relations are parsed.
Presentation make_presentation(const std::string& name, const GroundField& field, int theta,
                               const std::vector<std::pair<std::string, std::string>>& params,
                               const std::vector<std::tuple<int, int, std::string>>& entries,
                               const std::vector<std::string>& relations);

/// All quantum Serre relations (ad x_i)^(m_ij+1) x_j, dropping those linearly
/// dependent on earlier ones of the same degree. Throws UndefinedCartanEntry.
Presentation cartan_serre_presentation(const BraidingMatrix& q, const std::string& name = "serre");

/// Block-diagonal braiding (cross entries 1), union of the block relations
/// and x_ij for i < j in different blocks. Clashing parameter names of later
/// blocks get a suffix _k (k the 1-based block number).
Presentation compose(const std::vector<Presentation>& blocks, const std::string& name = "");

} // namespace nichols
