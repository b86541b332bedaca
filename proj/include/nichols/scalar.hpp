#pragma once

#include "nichols/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nichols {

/// The coefficient field K = Q(zeta_M)(t): one cyclotomic layer and one
/// transcendental. M = 1 means plain rationals.
struct GroundField {
    int M = 1;
    std::string transcendental = "t";

    friend bool operator==(const GroundField&, const GroundField&) = default;
};

namespace detail {

/// Dense univariate polynomial in t over Q(zeta_M), lowest degree first,
/// no trailing zeros (the zero polynomial is empty).
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(std::vector<Cyclotomic> coeffs);
    static TPoly constant(const Cyclotomic& c);
    static TPoly monomial(const Cyclotomic& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Cyclotomic& coeff(int k) const { return coeffs_[k]; }
    const Cyclotomic& leading() const { return coeffs_.back(); }
    const std::vector<Cyclotomic>& coeffs() const { return coeffs_; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

    TPoly operator-() const;
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly scaled(const Cyclotomic& c) const;
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; divisor must be nonzero.
    static void divmod(const TPoly& num, const TPoly& den, TPoly& quo, TPoly& rem);
    /// Monic gcd (zero only when both inputs are zero).
    static TPoly gcd(TPoly a, TPoly b);
    TPoly monic() const;

private:
    void trim();
    std::vector<Cyclotomic> coeffs_;
};

} // namespace detail

/// Element of Q(zeta_M)(t) in canonical form: numerator and denominator
/// coprime, denominator monic, zero stored as 0/1. Canonical form makes
/// equality structural.
class Scalar {
public:
    Scalar() : Scalar(1) {}
    explicit Scalar(int order);

    static Scalar zero(int order) { return Scalar(order); }
    static Scalar one(int order) { return rational(order, 1); }
    static Scalar rational(int order, const mpq_class& value);
    static Scalar from_int(int order, long value) { return rational(order, mpq_class(value)); }
    static Scalar zeta(int order, long exponent = 1);
    static Scalar transcendental(int order);
    static Scalar from_cyclotomic(const Cyclotomic& c);

    int field_order() const { return order_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// True when the value does not involve t.
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    std::optional<Cyclotomic> constant_value() const;
    /// max(deg numerator, deg denominator); additive under powers.
    int height() const;

    const detail::TPoly& numerator() const { return num_; }
    const detail::TPoly& denominator() const { return den_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    Scalar pow(long exponent) const;

    /// Exact multiplicative order when this is a root of unity; nullopt when
    /// it involves t or is a constant of infinite order. Throws on zero.
    std::optional<int> root_of_unity_order() const;

    /// Canonical text; re-parses to the same value.
    std::string to_string(const std::string& transcendental = "t") const;

private:
    Scalar(int order, detail::TPoly num, detail::TPoly den);
    void normalize();
    void lift_rational_to(int order);
    void unify(Scalar& other);

    int order_;
    detail::TPoly num_;
    detail::TPoly den_;
};

/// Smallest m >= 0 with base^m == target, for a base that is not a root of
/// unity; nullopt if none. Exact when base involves t or has rational norm
/// of absolute value != 1; otherwise falls back to scanning m < scan_limit.
std::optional<long> discrete_log(const Scalar& base, const Scalar& target, long scan_limit = 256);

} // namespace nichols
