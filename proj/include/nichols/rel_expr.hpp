#pragma once

#include "nichols/free_algebra.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace nichols {

/// Relation-expression syntax tree. Scalars are degree-zero expressions, so
/// one tree type covers coefficients and algebra elements.
struct RelNode {
    enum class Kind {
        Generator,  // x(i)
        Iterated,   // x(i1,...,ik) = ad(i1; ad(i2; ... x(ik)))
        Commutator, // [a, b]
        AdPower,    // ad(i; e)^n
        Power,      // e^n
        Product,
        Quotient,   // e / scalar
        Sum,
        Difference,
        Negate,
        Number,
        Zeta,
        Param,      // parameter or the transcendental
        Entry       // q_(i,j)
    };
    Kind kind;
    std::size_t position = 0;
    std::vector<int> indices; // 1-based as written
    long exponent = 1;
    std::string name;
    std::string number; // decimal digits
    std::vector<std::shared_ptr<const RelNode>> children;
};

class RelExpr {
public:
    RelExpr() = default;
    RelExpr(std::string source, std::shared_ptr<const RelNode> root)
        : source_(std::move(source)), root_(std::move(root)) {}

    const std::string& source() const { return source_; }
    const RelNode& root() const { return *root_; }
    bool empty() const { return !root_; }

    /// Indented tree, one node per line.
    std::string dump() const;
    /// Text regenerated from the tree; parses back to the same tree shape.
    std::string to_text() const;

private:
    std::string source_;
    std::shared_ptr<const RelNode> root_;
};

/// Names are resolved at evaluation time: `z` is zeta_M, `transcendental`
/// is the field's variable, anything else must be in `params`.
struct EvalContext {
    GroundField field;
    int rank = 0;
    const BraidingMatrix* braiding = nullptr; // required for brackets, ad, q_(i,j)
    std::map<std::string, Scalar> params;
};

/// Generator indices shifted by `offset`, names renamed per `rename`.
RelExpr relabel(const RelExpr& e, int offset, const std::map<std::string, std::string>& rename = {});

/// Throws ParseError with the byte offset of the offending token.
RelExpr parse_rel_expr(const std::string& text);

/// Throws NonHomogeneous, std::out_of_range for bad indices, ParseError for
/// unknown names, InvalidOperand for division by zero.
FreeElement eval_rel_expr(const RelExpr& e, const EvalContext& ctx);

/// Convenience: parse and evaluate.
FreeElement eval_rel_expr(const std::string& text, const EvalContext& ctx);

/// Scalar literal in the same syntax; the value must be a constant of
/// degree zero.
Scalar parse_scalar(const std::string& text, const EvalContext& ctx);

} // namespace nichols
