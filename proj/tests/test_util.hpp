#pragma once

#include "nichols/braiding.hpp"
#include "nichols/free_algebra.hpp"
#include "nichols/scalar.hpp"

#include <map>
#include <ostream>
#include <random>
#include <tuple>

namespace nichols {

// readable gtest failure messages
inline void PrintTo(const MultiDegree& d, std::ostream* os)
{
    *os << d.to_string();
}

} // namespace nichols

namespace nichols::testing {

/// Small random element of Q(zeta_M)(t): a ratio of low-degree polynomials.
inline Scalar random_scalar(std::mt19937& rng, int order, bool allow_zero = true)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> exp(0, order);
    std::uniform_int_distribution<int> deg(0, 2);
    auto poly = [&] {
        Scalar p = Scalar::zero(order);
        int d = deg(rng);
        for (int k = 0; k <= d; ++k)
            p += Scalar::from_int(order, coeff(rng)) * Scalar::zeta(order, exp(rng)) *
                 Scalar::transcendental(order).pow(k);
        return p;
    };
    for (;;) {
        Scalar num = poly();
        Scalar den = poly();
        if (den.is_zero() || (!allow_zero && num.is_zero()))
            continue;
        return num / den;
    }
}

/// Random braiding whose entries are monomials zeta^a t^b.
inline BraidingMatrix random_braiding(std::mt19937& rng, int rank, int order)
{
    GroundField f{order, "t"};
    BraidingMatrix q(f, rank);
    std::uniform_int_distribution<int> a(0, order - 1);
    std::uniform_int_distribution<int> b(-2, 2);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            q.set(i, j, Scalar::zeta(order, a(rng)) * Scalar::transcendental(order).pow(b(rng)));
    return q;
}

/// Elements of V^(x)3 in the word basis, for coassociativity checks.
using Triple = std::map<std::tuple<Word, Word, Word>, Scalar>;

inline void add(Triple& t, const Word& a, const Word& b, const Word& c, const Scalar& s)
{
    auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero())
        t.erase(it);
}

/// (Delta (x) id) x
inline Triple delta_left(const BraidingMatrix& q, const TensorElement& x)
{
    Triple out;
    for (const auto& [key, c] : x.terms()) {
        TensorElement inner_delta = coproduct_word(q, key.first);
        for (const auto& [inner, d] : inner_delta.terms())
            add(out, inner.first, inner.second, key.second, c * d);
    }
    return out;
}

/// (id (x) Delta) x
inline Triple delta_right(const BraidingMatrix& q, const TensorElement& x)
{
    Triple out;
    for (const auto& [key, c] : x.terms()) {
        TensorElement inner_delta = coproduct_word(q, key.second);
        for (const auto& [inner, d] : inner_delta.terms())
            add(out, key.first, inner.first, inner.second, c * d);
    }
    return out;
}

inline Word random_word(std::mt19937& rng, int rank, int length)
{
    std::uniform_int_distribution<int> letter(0, rank - 1);
    Word w;
    for (int k = 0; k < length; ++k)
        w.push_back(static_cast<std::uint8_t>(letter(rng)));
    return w;
}

inline FreeElement random_element(std::mt19937& rng, const BraidingMatrix& q, int length, int terms)
{
    FreeElement u(q.rank());
    for (int k = 0; k < terms; ++k)
        u.add_term(random_word(rng, q.rank(), length), random_scalar(rng, q.field().M));
    return u;
}

} // namespace nichols::testing

#include "nichols/catalog.hpp"

namespace nichols::testing {

/// Braiding from literal entries (1-based), missing entries 1.
inline BraidingMatrix braiding(int M, int theta, const std::vector<std::tuple<int, int, std::string>>& entries)
{
    return make_presentation("test", GroundField{M, "t"}, theta, {}, entries, {}).braiding;
}

/// Cartan-type braiding q_ii = t^(d_i), q_ij q_ji = t^(d_i a_ij) from a
/// symmetrizable Cartan matrix given by its symmetrized form d_i a_ij.
inline BraidingMatrix cartan_braiding(const std::vector<std::vector<int>>& sym)
{
    const int n = static_cast<int>(sym.size());
    GroundField f{1, "t"};
    BraidingMatrix q(f, n);
    Scalar t = Scalar::transcendental(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                q.set(i, i, t.pow(sym[i][i] / 2));
            else if (i < j)
                q.set(i, j, t.pow(sym[i][j]));
        }
    return q;
}

} // namespace nichols::testing
