#include "nichols/series.hpp"

#include "nichols/errors.hpp"

#include <cctype>

namespace nichols {

IntPoly IntPoly::constant(int rank, const mpz_class& c)
{
    IntPoly p(rank);
    p.add_term(MultiDegree(rank), c);
    return p;
}

IntPoly IntPoly::variable(int rank, int i)
{
    return monomial(MultiDegree::unit(rank, i));
}

IntPoly IntPoly::monomial(const MultiDegree& exponent, const mpz_class& c)
{
    IntPoly p(exponent.rank());
    p.add_term(exponent, c);
    return p;
}

mpz_class IntPoly::coefficient(const MultiDegree& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int IntPoly::total_degree() const
{
    return terms_.empty() ? -1 : terms_.rbegin()->first.total();
}

void IntPoly::add_term(const MultiDegree& e, const mpz_class& c)
{
    if (e.rank() != rank_)
        throw std::invalid_argument("exponent length does not match the number of variables");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    IntPoly r(a.rank_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

IntPoly IntPoly::pow(int n) const
{
    if (n < 0)
        throw std::invalid_argument("negative polynomial power");
    IntPoly r = constant(rank_, 1);
    for (int k = 0; k < n; ++k)
        r = r * *this;
    return r;
}

IntPoly IntPoly::shifted(int offset, int new_rank) const
{
    IntPoly r(new_rank);
    for (const auto& [e, c] : terms_) {
        MultiDegree f(new_rank);
        for (int i = 0; i < rank_; ++i)
            f[i + offset] = e[i];
        r.add_term(f, c);
    }
    return r;
}

std::vector<mpz_class> IntPoly::diagonal() const
{
    std::vector<mpz_class> out(std::max(total_degree() + 1, 0));
    for (const auto& [e, c] : terms_)
        out[e.total()] += c;
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

std::string IntPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class mag = abs(c);
        std::string mono;
        for (int i = 0; i < rank_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "t" + std::to_string(i + 1);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
        if (first)
            out += (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, int rank) : s_(s), rank_(rank) {}

    IntPoly parse()
    {
        IntPoly p = sum();
        skip();
        if (i_ != s_.size())
            throw ParseError(std::string("unexpected '") + s_[i_] + "' in polynomial", i_);
        return p;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool accept(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    long number()
    {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (start == i_)
            throw ParseError("expected a number", start);
        return std::stol(s_.substr(start, i_ - start));
    }

    IntPoly sum()
    {
        IntPoly p = accept('-') ? IntPoly::constant(rank_, 0) - product() : product();
        for (;;) {
            if (accept('+'))
                p += product();
            else if (accept('-'))
                p -= product();
            else
                return p;
        }
    }
    IntPoly product()
    {
        IntPoly p = power();
        for (;;) {
            skip();
            if (accept('*'))
                p = p * power();
            else if (i_ < s_.size() && (s_[i_] == '(' || s_[i_] == 't' || std::isdigit(static_cast<unsigned char>(s_[i_]))))
                p = p * power();
            else
                return p;
        }
    }
    IntPoly power()
    {
        IntPoly base = atom();
        while (accept('^'))
            base = base.pow(static_cast<int>(number()));
        return base;
    }
    IntPoly atom()
    {
        skip();
        if (accept('(')) {
            IntPoly p = sum();
            if (!accept(')'))
                throw ParseError("expected ')'", i_);
            return p;
        }
        if (i_ < s_.size() && s_[i_] == 't') {
            std::size_t at = i_++;
            long k = number();
            if (k < 1 || k > rank_)
                throw ParseError("variable t" + std::to_string(k) + " out of range", at);
            return IntPoly::variable(rank_, static_cast<int>(k - 1));
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            return IntPoly::constant(rank_, mpz_class(number()));
        throw ParseError(i_ < s_.size() ? std::string("unexpected '") + s_[i_] + "'" : "unexpected end of input", i_);
    }

    const std::string& s_;
    int rank_;
    std::size_t i_ = 0;
};

} // namespace

IntPoly parse_int_poly(const std::string& text, int rank)
{
    return PolyParser(text, rank).parse();
}

RationalSeries::RationalSeries(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (num_.rank() != den_.rank())
        throw std::invalid_argument("numerator and denominator use different variables");
    if (den_.coefficient(MultiDegree(den_.rank())) == 0)
        throw InvalidOperand("series denominator has zero constant term");
}

RationalSeries RationalSeries::parse(const std::string& numerator, const std::string& denominator, int rank)
{
    return RationalSeries(parse_int_poly(numerator, rank), parse_int_poly(denominator, rank));
}

RationalSeries RationalSeries::geometric(const MultiDegree& d)
{
    IntPoly den = IntPoly::constant(d.rank(), 1);
    den.add_term(d, -1);
    return RationalSeries(IntPoly::constant(d.rank(), 1), den);
}

SeriesTable RationalSeries::expand(int d) const
{
    const int n = rank();
    const mpq_class c0(den_.coefficient(MultiDegree(n)));
    SeriesTable f;
    for (const auto& a : multidegrees_up_to(n, d)) {
        mpq_class v(num_.coefficient(a));
        for (const auto& [b, c] : den_.terms()) {
            if (b.is_zero() || !b.fits_in(a))
                continue;
            v -= mpq_class(c) * f.at(a - b);
        }
        v /= c0;
        f.emplace(a, v);
    }
    return f;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b)
{
    return RationalSeries(a.num_ * b.num_, a.den_ * b.den_);
}

RationalSeries RationalSeries::block_product(const RationalSeries& a, const RationalSeries& b)
{
    int n = a.rank() + b.rank();
    return RationalSeries(a.num_.shifted(0, n) * b.num_.shifted(a.rank(), n),
                          a.den_.shifted(0, n) * b.den_.shifted(a.rank(), n));
}

std::string RationalSeries::to_string() const
{
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

namespace {

// Multiplicity of the root t = 1.
int multiplicity_at_one(std::vector<mpz_class> p)
{
    int m = 0;
    for (;;) {
        mpz_class value = 0;
        for (const auto& c : p)
            value += c;
        if (value != 0 || p.empty())
            return m;
        // synthetic division by (t - 1)
        std::vector<mpz_class> quo(p.size() - 1);
        mpz_class carry = 0;
        for (std::size_t k = p.size() - 1; k >= 1; --k) {
            carry += p[k];
            quo[k - 1] = carry;
        }
        p = std::move(quo);
        ++m;
    }
}

} // namespace

int gkdim_pole_order(const RationalSeries& s)
{
    auto num = s.numerator().diagonal();
    if (num.empty())
        throw InvalidOperand("gkdim_pole_order: numerator is zero");
    int order = multiplicity_at_one(s.denominator().diagonal()) - multiplicity_at_one(num);
    return std::max(order, 0);
}

SeriesTable convolve(const SeriesTable& a, const SeriesTable& b, int d)
{
    SeriesTable out;
    for (const auto& [da, ca] : a) {
        if (ca == 0 || da.total() > d)
            continue;
        for (const auto& [db, cb] : b) {
            if (cb == 0 || da.total() + db.total() > d)
                continue;
            out[da + db] += ca * cb;
        }
    }
    return out;
}

SeriesTable block_convolve(const SeriesTable& a, const SeriesTable& b, int d)
{
    SeriesTable out;
    for (const auto& [da, ca] : a) {
        if (da.total() > d)
            continue;
        for (const auto& [db, cb] : b) {
            if (da.total() + db.total() > d)
                continue;
            std::vector<int> v = da.values();
            v.insert(v.end(), db.values().begin(), db.values().end());
            out[MultiDegree(std::move(v))] = ca * cb;
        }
    }
    return out;
}

SeriesTable to_series_table(const HilbertTable& h)
{
    SeriesTable out;
    for (const auto& [d, n] : h)
        out[d] = n;
    return out;
}

} // namespace nichols
