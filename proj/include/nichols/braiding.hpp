#pragma once

#include "nichols/scalar.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace nichols {

/// Element of Z^theta; degrees of algebra elements are nonnegative, signed
/// vectors appear as reflection images.
class MultiDegree {
public:
    MultiDegree() = default;
    explicit MultiDegree(int rank) : v_(rank, 0) {}
    MultiDegree(std::initializer_list<int> values) : v_(values) {}
    explicit MultiDegree(std::vector<int> values) : v_(std::move(values)) {}

    static MultiDegree unit(int rank, int i);

    int rank() const { return static_cast<int>(v_.size()); }
    int operator[](int i) const { return v_[i]; }
    int& operator[](int i) { return v_[i]; }
    const std::vector<int>& values() const { return v_; }

    int total() const;
    bool is_zero() const;
    bool is_nonnegative() const;
    /// Componentwise a <= b.
    bool fits_in(const MultiDegree& bound) const;

    MultiDegree& operator+=(const MultiDegree& other);
    MultiDegree& operator-=(const MultiDegree& other);
    friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
    friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }
    friend MultiDegree operator*(int k, MultiDegree a);
    MultiDegree operator-() const { return -1 * *this; }

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    /// Total degree first, then lexicographically descending, so that
    /// (2,0,0) < (1,1,0) < (0,0,2): the graded order with t_1 > t_2 > ...
    friend std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b);

    std::string to_string() const;

private:
    std::vector<int> v_;
};

/// All nonnegative multidegrees of the given rank with total degree <= bound,
/// in the order of operator<=>.
std::vector<MultiDegree> multidegrees_up_to(int rank, int total_bound);

/// Diagonal braiding matrix (q_ij); vertices are 0-based internally and
/// printed 1-based.
class BraidingMatrix {
public:
    BraidingMatrix() = default;
    /// All entries 1.
    BraidingMatrix(GroundField field, int rank);

    int rank() const { return rank_; }
    const GroundField& field() const { return field_; }

    const Scalar& operator()(int i, int j) const { return q_[i * rank_ + j]; }
    void set(int i, int j, Scalar value);
    /// Edge label q_ij * q_ji.
    Scalar edge(int i, int j) const { return (*this)(i, j) * (*this)(j, i); }

    /// Principal submatrix on the given vertices, in the given order.
    BraidingMatrix restricted(const std::vector<int>& vertices) const;

    friend bool operator==(const BraidingMatrix&, const BraidingMatrix&) = default;

private:
    GroundField field_;
    int rank_ = 0;
    std::vector<Scalar> q_;
};

/// chi(a, b) = prod q_ij^(a_i b_j), the biadditive extension of the matrix.
Scalar bicharacter(const BraidingMatrix& q, const MultiDegree& a, const MultiDegree& b);

/// Smallest m >= 0 with q_ii^m q~_ij = 1, or with q_ii^(m+1) = 1 when no
/// smaller m satisfies the first condition. nullopt when neither happens.
std::optional<int> cartan_entry(const BraidingMatrix& q, int i, int j);

struct DynkinDiagram {
    struct Edge {
        int a, b;
        Scalar label;
    };
    std::vector<Scalar> vertex_labels;
    std::vector<Edge> edges;   // a < b, label != 1, sorted
    GroundField field;

    /// Canonical text key; equal keys iff equal diagrams.
    std::string key() const;
    std::string render() const;
};

DynkinDiagram dynkin_diagram(const BraidingMatrix& q);

struct ConditionViolation {
    enum class Kind { Cycle, Triangle, LabelOne, TriangleRemark };
    Kind kind;
    std::vector<int> vertices;
    std::string description;
};

std::string to_string(ConditionViolation::Kind kind);

/// Necessary conditions for a finite root system: no chordless N-cycles with
/// N >= 4; the 3-cycle conditions; no label-1 vertex with a nontrivial edge.
/// An empty result is not a proof of finiteness.
std::vector<ConditionViolation> check_necessary_conditions(const BraidingMatrix& q);

/// Extra conditions on 3-cycles used for infinite-dimensional Nichols algebras
/// of finite GKdim: at least two labels -1, any other label not a root of
/// unity, and the edge pattern around a vertex whose label is not -1.
std::vector<ConditionViolation> check_triangle_remark(const BraidingMatrix& q);

/// Append a vertex for the degree beta: q_(i,beta) = chi(alpha_i, beta),
/// q_(beta,i) = chi(beta, alpha_i), q_(beta,beta) = chi(beta, beta).
BraidingMatrix extend_by_root(const BraidingMatrix& q, const MultiDegree& beta);

/// Components of the graph with edges q~_ij != 1, each sorted, ordered by
/// smallest vertex.
std::vector<std::vector<int>> connected_components(const BraidingMatrix& q);

enum class ExceptionalType { SuperA3_J2, SuperA3_J123, D21a_1, D21a_2, D21a_3, Other };

std::string to_string(ExceptionalType type);
std::optional<ExceptionalType> exceptional_type_from_string(const std::string& tag);

struct TypeMatch {
    ExceptionalType type = ExceptionalType::Other;
    /// relabel[k] = vertex of the input playing the role of template vertex k.
    std::vector<int> relabel;
};

TypeMatch recognize_exceptional_type(const BraidingMatrix& q);

} // namespace nichols
