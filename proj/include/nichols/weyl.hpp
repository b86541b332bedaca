#pragma once

#include "nichols/braiding.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nichols {

/// Degree map of the reflection at vertex i: alpha_j -> alpha_j + m_ij alpha_i
/// (j != i), alpha_i -> -alpha_i. Column j holds the image of alpha_j.
/// Throws UndefinedCartanEntry when some m_ij does not exist.
std::vector<MultiDegree> reflection_map(const BraidingMatrix& q, int i);

/// The reflected braiding matrix q'_jk = chi(s_i alpha_j, s_i alpha_k).
BraidingMatrix reflect(const BraidingMatrix& q, int i);

struct RootSystemResult {
    enum class Status { Finite, Diverged, UndefinedM, Inconsistent };
    Status status = Status::Finite;
    std::vector<MultiDegree> roots;         // sorted; complete only when Finite
    std::optional<std::pair<int, int>> witness; // (i, j) when UndefinedM
    std::optional<MultiDegree> mixed_root; // when Inconsistent
    std::vector<int> witness_path; // reflections leading to the blocked object
    int cap = 500;
    int objects = 0;   // distinct Dynkin diagrams visited
    int morphisms = 0; // distinct (object, degree map) states visited
};

std::string to_string(RootSystemResult::Status status);

/// Breadth-first enumeration of the Weyl groupoid orbit. Objects are
/// identified by their Dynkin diagram. Reports Diverged once more than `cap`
/// roots or `cap` objects appear; that is a presumption, not a proof.
/// Inconsistent means a composite of reflections sent a simple root to a
/// vector of mixed sign, so the data is not a Cartan graph with real roots.
RootSystemResult positive_roots(const BraidingMatrix& q, int cap = 500);

} // namespace nichols
