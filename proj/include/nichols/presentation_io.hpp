#pragma once

#include "nichols/catalog.hpp"

#include <optional>
#include <string>

namespace nichols {

/// Sectioned text format:
///
///   [presentation]  name = ...
///   [field]         M = 3, transcendental = t
///   [params]        s = "1/(z*t)"
///   [braiding]      theta = 3, q(1,2) = "t^-1"   (missing entries are 1)
///   [relations]     one relation per line
///   [pbw]           expr : height|inf
///   [series]        numerator = "...", denominator = "..."
///
/// '#' starts a comment; values may be quoted.
struct PresentationFile {
    Presentation presentation;
    std::optional<PBWSpec> pbw;
    std::optional<RationalSeries> series;
};

/// Throws ParseError with a byte offset into `text`.
PresentationFile parse_presentation_file(const std::string& text);
PresentationFile load_presentation_file(const std::string& path);

std::string format_presentation_file(const Presentation& p, const PBWSpec* pbw = nullptr,
                                     const RationalSeries* series = nullptr);

/// A file holding only a [pbw] section, or bare "expr : height" lines.
PBWSpec load_pbw_file(const std::string& path);
/// A file with a [series] section, or two lines numerator / denominator.
RationalSeries load_series_file(const std::string& path, int rank);

std::string read_text_file(const std::string& path);

} // namespace nichols
