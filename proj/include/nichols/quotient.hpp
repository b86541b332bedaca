#pragma once

#include "nichols/free_algebra.hpp"
#include "nichols/rel_expr.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace nichols {

struct NamedScalar {
    std::string name;
    std::string source;
    Scalar value;
};

/// Braiding plus homogeneous relations; the defining data of T(V)/I.
struct Presentation {
    std::string name;
    BraidingMatrix braiding;
    std::vector<NamedScalar> params;
    std::vector<RelExpr> relations;

    int rank() const { return braiding.rank(); }
    EvalContext context() const;
    FreeElement evaluate(const RelExpr& e) const;
    FreeElement evaluate(const std::string& text) const;
    /// Throws NonHomogeneous or std::invalid_argument (degree < 2).
    std::vector<FreeElement> evaluated_relations() const;

    /// Copy with `text` appended (parsed) to the relations.
    Presentation with_relation(const std::string& text) const;
    /// Copy without relation `index`.
    Presentation without_relation(std::size_t index) const;
};

enum class Execution { Serial, Parallel };

using SparseVector = std::vector<std::pair<int, Scalar>>;

/// Row-reduced echelon form of `rows` (dense, equal length). Pivot of a row
/// is its least nonzero column; pivot entries are 1 and pivot columns are
/// otherwise zero. Rows come back sorted by pivot, zero rows dropped. The
/// result is unique, so both kernels agree exactly.
std::vector<std::vector<Scalar>> row_reduce(std::vector<std::vector<Scalar>> rows, Execution exec);

/// Graded quotient T(V)/I computed lazily per multidegree up to a total
/// degree cutoff. Bases are the degree-lex-least complements of the ideal.
/// Internally parallel; a single instance is not for concurrent callers.
class GradedQuotient {
public:
    GradedQuotient(const Presentation& p, int cutoff = 8, Execution exec = Execution::Parallel);
    GradedQuotient(BraidingMatrix q, std::vector<FreeElement> relations, int cutoff = 8,
                   Execution exec = Execution::Parallel);
    ~GradedQuotient();
    GradedQuotient(GradedQuotient&&) noexcept;
    GradedQuotient& operator=(GradedQuotient&&) noexcept;

    int rank() const;
    int cutoff() const;
    const BraidingMatrix& braiding() const;
    const std::vector<FreeElement>& relations() const;

    const std::vector<Word>& component_basis(const MultiDegree& a);
    int dimension(const MultiDegree& a);
    /// Dimensions for all multidegrees of total degree <= d, degree-lex.
    std::map<MultiDegree, int> hilbert_table(int d);

    FreeElement normal_form(const FreeElement& u);
    bool is_zero(const FreeElement& u);
    /// Both legs of the defect reduced to normal form.
    TensorElement reduced_defect(const FreeElement& u);
    bool is_primitive(const FreeElement& u);
    /// The elements u x_i - chi(deg u, alpha_i) x_i u reduced; all zero iff q-central.
    std::vector<FreeElement> centrality_defects(const FreeElement& u);
    bool is_q_central(const FreeElement& u);

    /// Compute every component below the bound.
    void ensure(const MultiDegree& a);
    void ensure_total(int d);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace nichols
