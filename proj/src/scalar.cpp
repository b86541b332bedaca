#include "nichols/scalar.hpp"

#include "nichols/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace nichols {

namespace detail {

TPoly::TPoly(std::vector<Cyclotomic> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

TPoly TPoly::constant(const Cyclotomic& c)
{
    return TPoly(std::vector<Cyclotomic>{c});
}

TPoly TPoly::monomial(const Cyclotomic& c, int degree)
{
    std::vector<Cyclotomic> coeffs(degree + 1, Cyclotomic(c.order()));
    coeffs[degree] = c;
    return TPoly(std::move(coeffs));
}

void TPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

TPoly TPoly::operator-() const
{
    TPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

TPoly operator+(const TPoly& a, const TPoly& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const TPoly& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
    const TPoly& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
    TPoly r = longer;
    for (std::size_t k = 0; k < shorter.coeffs_.size(); ++k)
        r.coeffs_[k] += shorter.coeffs_[k];
    r.trim();
    return r;
}

TPoly operator-(const TPoly& a, const TPoly& b)
{
    return a + (-b);
}

TPoly operator*(const TPoly& a, const TPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const int order = a.coeffs_[0].order() == 1 ? b.coeffs_[0].order() : a.coeffs_[0].order();
    std::vector<Cyclotomic> out(a.coeffs_.size() + b.coeffs_.size() - 1, Cyclotomic(order));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (!b.coeffs_[j].is_zero())
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TPoly(std::move(out));
}

TPoly TPoly::scaled(const Cyclotomic& c) const
{
    if (c.is_zero())
        return {};
    TPoly r = *this;
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

void TPoly::divmod(const TPoly& num, const TPoly& den, TPoly& quo, TPoly& rem)
{
    if (den.is_zero())
        throw InvalidOperand("polynomial division by zero");
    rem = num;
    if (num.degree() < den.degree()) {
        quo = TPoly();
        return;
    }
    const Cyclotomic lead_inv = den.leading().inverse();
    std::vector<Cyclotomic> q(num.degree() - den.degree() + 1, Cyclotomic(lead_inv.order()));
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        const int shift = rem.degree() - den.degree();
        Cyclotomic c = rem.leading() * lead_inv;
        q[shift] = c;
        for (int j = 0; j <= den.degree(); ++j)
            rem.coeffs_[shift + j] -= c * den.coeffs_[j];
        rem.coeffs_.back() = Cyclotomic(c.order());
        rem.trim();
    }
    quo = TPoly(std::move(q));
}

TPoly TPoly::monic() const
{
    if (is_zero())
        return {};
    if (leading().is_one())
        return *this;
    return scaled(leading().inverse());
}

TPoly TPoly::gcd(TPoly a, TPoly b)
{
    while (!b.is_zero()) {
        if (b.degree() == 0)
            return constant(Cyclotomic::rational(b.leading().order(), 1));
        TPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace detail

using detail::TPoly;

Scalar::Scalar(int order) : order_(order), num_(), den_(TPoly::constant(Cyclotomic::rational(order, 1))) {}

Scalar::Scalar(int order, TPoly num, TPoly den) : order_(order), num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

Scalar Scalar::rational(int order, const mpq_class& value)
{
    Scalar s(order);
    s.num_ = TPoly::constant(Cyclotomic::rational(order, value));
    return s;
}

Scalar Scalar::zeta(int order, long exponent)
{
    Scalar s(order);
    s.num_ = TPoly::constant(Cyclotomic::zeta_power(order, exponent));
    return s;
}

Scalar Scalar::transcendental(int order)
{
    Scalar s(order);
    s.num_ = TPoly::monomial(Cyclotomic::rational(order, 1), 1);
    return s;
}

Scalar Scalar::from_cyclotomic(const Cyclotomic& c)
{
    Scalar s(c.order());
    s.num_ = TPoly::constant(c);
    return s;
}

void Scalar::normalize()
{
    if (den_.is_zero())
        throw InvalidOperand("zero denominator");
    if (num_.is_zero()) {
        den_ = TPoly::constant(Cyclotomic::rational(order_, 1));
        return;
    }
    if (den_.degree() > 0 && num_.degree() >= 0) {
        TPoly g = TPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            TPoly q, r;
            TPoly::divmod(num_, g, q, r);
            num_ = std::move(q);
            TPoly::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    if (!den_.leading().is_one()) {
        Cyclotomic inv = den_.leading().inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool Scalar::is_one() const
{
    return num_.is_one() && den_.is_one();
}

std::optional<Cyclotomic> Scalar::constant_value() const
{
    if (!is_constant())
        return std::nullopt;
    if (num_.is_zero())
        return Cyclotomic(order_);
    return num_.coeff(0);
}

int Scalar::height() const
{
    return std::max(num_.degree(), den_.degree());
}

void Scalar::lift_rational_to(int order)
{
    if (order_ == order)
        return;
    auto c = constant_value();
    if (!c || !c->is_rational())
        throw InvalidOperand("operands live in different coefficient fields");
    *this = rational(order, c->rational_part());
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {

bool is_rational_constant(const Scalar& s)
{
    auto c = s.constant_value();
    return c && c->is_rational();
}

} // namespace

void Scalar::unify(Scalar& other)
{
    if (order_ == other.order_)
        return;
    if (is_rational_constant(*this))
        lift_rational_to(other.order_);
    else
        other.lift_rational_to(order_);
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    if (order_ != other.order_) {
        Scalar o = other;
        unify(o);
        return *this += o;
    }
    if (other.is_zero())
        return *this;
    if (den_ == other.den_) {
        num_ = num_ + other.num_;
        if (den_.degree() > 0 || num_.is_zero())
            normalize();
        return *this;
    }
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    return *this += -other;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    if (order_ != other.order_) {
        Scalar o = other;
        unify(o);
        return *this *= o;
    }
    if (is_zero() || other.is_zero()) {
        *this = Scalar(order_);
        return *this;
    }
    if (den_.degree() == 0 && other.den_.degree() == 0) {
        num_ = num_ * other.num_;
        return *this;
    }
    num_ = num_ * other.num_;
    den_ = den_ * other.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other)
{
    return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.order_ == b.order_)
        return a.num_ == b.num_ && a.den_ == b.den_;
    // different fields: equal only as rational constants
    auto ca = a.constant_value();
    auto cb = b.constant_value();
    return ca && cb && *ca == *cb;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw InvalidOperand("division by zero");
    return Scalar(order_, den_, num_);
}

Scalar Scalar::pow(long exponent) const
{
    Scalar base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
    Scalar result = one(order_);
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

std::optional<int> Scalar::root_of_unity_order() const
{
    if (is_zero())
        throw InvalidOperand("root-of-unity test on zero");
    auto c = constant_value();
    if (!c)
        return std::nullopt;
    return c->root_of_unity_order();
}

namespace {

bool single_term(const Cyclotomic& c)
{
    int nonzero = 0;
    for (int k = 0; k < c.dimension(); ++k)
        nonzero += c.coord(k) != 0;
    return nonzero <= 1;
}

bool negative_single(const Cyclotomic& c)
{
    for (int k = 0; k < c.dimension(); ++k)
        if (c.coord(k) != 0)
            return c.coord(k) < 0;
    return false;
}

std::string poly_to_string(const TPoly& p, const std::string& t)
{
    if (p.is_zero())
        return "0";
    if (p.degree() == 0)
        return p.coeff(0).to_string();
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Cyclotomic& c = p.coeff(k);
        if (c.is_zero())
            continue;
        std::string body;
        bool negative = false;
        if (single_term(c)) {
            negative = negative_single(c);
            Cyclotomic magnitude = negative ? -c : c;
            if (k == 0 || !magnitude.is_one())
                body = magnitude.to_string();
        } else {
            body = "(" + c.to_string() + ")";
        }
        if (k > 0) {
            std::string power = k == 1 ? t : t + "^" + std::to_string(k);
            body = body.empty() ? power : body + "*" + power;
        }
        if (first)
            out << (negative ? "-" : "") << body;
        else
            out << (negative ? " - " : " + ") << body;
        first = false;
    }
    return out.str();
}

} // namespace

std::string Scalar::to_string(const std::string& transcendental) const
{
    std::string num = poly_to_string(num_, transcendental);
    if (den_.is_one())
        return num;
    bool compound_num = num_.coeffs().size() > 1 || !single_term(num_.coeff(0)) || num.find(' ') != std::string::npos;
    std::string out = compound_num ? "(" + num + ")" : num;
    out += "/(" + poly_to_string(den_, transcendental) + ")";
    return out;
}

std::optional<long> discrete_log(const Scalar& base, const Scalar& target, long scan_limit)
{
    if (base.is_zero() || target.is_zero())
        throw InvalidOperand("discrete logarithm of zero");
    if (target.is_one())
        return 0;
    if (base.height() > 0) {
        // Heights multiply under powers of a reduced fraction.
        if (target.height() % base.height() != 0)
            return std::nullopt;
        long m = target.height() / base.height();
        if (base.pow(m) == target)
            return m;
        return std::nullopt;
    }
    if (target.height() > 0)
        return std::nullopt;
    const mpq_class base_norm = abs(base.constant_value()->norm());
    const mpq_class target_norm = abs(target.constant_value()->norm());
    if (base_norm != 1) {
        mpq_class power = 1;
        Scalar value = Scalar::one(base.field_order());
        for (long m = 1;; ++m) {
            power *= base_norm;
            value *= base;
            if (base_norm > 1 ? power > target_norm : power < target_norm)
                return std::nullopt;
            if (power == target_norm && value == target)
                return m;
        }
    }
    Scalar value = Scalar::one(base.field_order());
    for (long m = 1; m < scan_limit; ++m) {
        value *= base;
        if (value == target)
            return m;
    }
    return std::nullopt;
}

} // namespace nichols
