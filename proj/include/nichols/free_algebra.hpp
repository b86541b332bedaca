#pragma once

#include "nichols/braiding.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nichols {

/// Letters are 0-based generator indices.
using Word = std::vector<std::uint8_t>;

/// Degree-lexicographic order: shorter words first, then lexicographic.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

MultiDegree word_degree(const Word& w, int rank);
std::string word_to_string(const Word& w);

/// Linear combination of words with nonzero coefficients.
class FreeElement {
public:
    using Terms = std::map<Word, Scalar, WordLess>;

    FreeElement() = default;
    explicit FreeElement(int rank) : rank_(rank) {}

    static FreeElement unit(int rank);
    static FreeElement generator(int rank, int i);
    static FreeElement word(int rank, Word w, Scalar coeff = Scalar::one(1));

    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const Scalar& coeff);
    Scalar coefficient(const Word& w) const;
    Scalar constant_term() const { return coefficient({}); }

    /// Common degree of all words; nullopt for zero. Throws NonHomogeneous.
    std::optional<MultiDegree> degree() const;
    bool is_homogeneous() const;
    int max_length() const;
    std::map<MultiDegree, FreeElement> components() const;

    FreeElement operator-() const;
    FreeElement& operator+=(const FreeElement& other);
    FreeElement& operator-=(const FreeElement& other);
    FreeElement& operator*=(const Scalar& c);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    friend FreeElement operator*(const Scalar& c, FreeElement a) { return a *= c; }
    /// Concatenation product.
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
    friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }

    std::string to_string(const std::string& transcendental = "t") const;

private:
    int rank_ = 0;
    Terms terms_;
};

FreeElement power(const FreeElement& u, int n);

/// [u, v]_c = uv - chi(deg u, deg v) vu; both arguments homogeneous.
FreeElement braided_commutator(const BraidingMatrix& q, const FreeElement& u, const FreeElement& v);

/// n-fold u -> [x_i, u]_c.
FreeElement ad_power(const BraidingMatrix& q, int i, const FreeElement& v, int n);

/// Element of T(V) (x) T(V).
class TensorElement {
public:
    using Key = std::pair<Word, Word>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const
        {
            WordLess less;
            if (less(a.first, b.first))
                return true;
            if (less(b.first, a.first))
                return false;
            return less(a.second, b.second);
        }
    };
    using Terms = std::map<Key, Scalar, KeyLess>;

    TensorElement() = default;
    explicit TensorElement(int rank) : rank_(rank) {}
    static TensorElement pure(const FreeElement& a, const FreeElement& b);

    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& a, const Word& b, const Scalar& coeff);
    Scalar coefficient(const Word& a, const Word& b) const;

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    TensorElement& operator*=(const Scalar& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

    std::string to_string(const std::string& transcendental = "t") const;

private:
    int rank_ = 0;
    Terms terms_;
};

/// Product in the braided tensor square:
/// (a (x) b)(c (x) d) = chi(deg b, deg c) ac (x) bd.
TensorElement braided_tensor_product(const BraidingMatrix& q, const TensorElement& x, const TensorElement& y);

/// Braided shuffle coproduct of a single word.
TensorElement coproduct_word(const BraidingMatrix& q, const Word& w);

/// Throws CutoffExceeded when u has a word longer than `cutoff`.
TensorElement coproduct(const BraidingMatrix& q, const FreeElement& u, int cutoff);

/// Delta(u) - u (x) 1 - 1 (x) u for homogeneous u without constant term.
TensorElement primitive_defect(const BraidingMatrix& q, const FreeElement& u);

} // namespace nichols
