#include <qpartid/bigpoly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qpartid
{

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

IntPoly IntPoly::constant(const BigInt &c)
{
    return IntPoly(std::vector<BigInt>{c});
}

IntPoly IntPoly::monomial(const BigInt &c, std::size_t e)
{
    if (c == 0) {
        return {};
    }
    std::vector<BigInt> v(e + 1);
    v[e] = c;
    return IntPoly(std::move(v));
}

std::optional<std::size_t> IntPoly::degree() const noexcept
{
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

void IntPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

IntPoly &IntPoly::operator+=(const IntPoly &other)
{
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    normalize();
    return *this;
}

IntPoly &IntPoly::operator-=(const IntPoly &other)
{
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    normalize();
    return *this;
}

IntPoly operator+(IntPoly a, const IntPoly &b)
{
    a += b;
    return a;
}

IntPoly operator-(IntPoly a, const IntPoly &b)
{
    a -= b;
    return a;
}

IntPoly operator-(IntPoly a)
{
    return scale(a, -1);
}

IntPoly operator*(const IntPoly &a, const IntPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<BigInt> out(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < bc.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

IntPoly scale(const IntPoly &a, const BigInt &c)
{
    if (c == 0) {
        return {};
    }
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (auto &x : out) {
        x *= c;
    }
    return IntPoly(std::move(out));
}

IntPoly shift(const IntPoly &a, std::size_t e)
{
    if (a.is_zero() || e == 0) {
        return a;
    }
    std::vector<BigInt> out(e + a.size());
    std::copy(a.coeffs().begin(), a.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(e));
    return IntPoly(std::move(out));
}

IntPoly substitute_power(const IntPoly &a, long c)
{
    if (c <= 0) {
        throw std::invalid_argument("substitute_power: exponent base must be positive, got " + std::to_string(c));
    }
    if (a.is_zero() || c == 1) {
        return a;
    }
    const auto step = static_cast<std::size_t>(c);
    std::vector<BigInt> out((a.size() - 1) * step + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i * step] = a.coeffs()[i];
    }
    return IntPoly(std::move(out));
}

IntPoly truncate(const IntPoly &a, std::size_t order)
{
    if (a.size() <= order + 1) {
        return a;
    }
    return IntPoly(std::vector<BigInt>(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

BigInt coeff_at(const IntPoly &a, std::size_t n)
{
    return n < a.size() ? a.coeffs()[n] : BigInt(0);
}

BigInt eval(const IntPoly &a, const BigInt &x)
{
    // Horner
    BigInt acc = 0;
    const auto c = a.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::string to_string(const IntPoly &a)
{
    if (a.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const BigInt &c = a.coeffs()[i];
        if (c == 0) {
            continue;
        }
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag;
        }
        os << 'q';
        if (i > 1) {
            os << '^' << i;
        }
    }
    return os.str();
}

std::string to_coeff_list(const IntPoly &a)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i != 0) {
            os << ", ";
        }
        os << a.coeffs()[i];
    }
    os << ']';
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const IntPoly &a)
{
    return os << to_string(a);
}

TruncSeries::TruncSeries(std::size_t q_order, std::size_t z_degree) : q_order_(q_order), rows_(z_degree + 1)
{
    rows_[0] = IntPoly{1};
}

TruncSeries::TruncSeries(std::size_t q_order, std::vector<IntPoly> rows) : q_order_(q_order), rows_(std::move(rows))
{
    if (rows_.empty()) {
        rows_.resize(1);
    }
    for (auto &r : rows_) {
        r = truncate(r, q_order_);
    }
}

BigInt TruncSeries::coeff(std::size_t q_exp, std::size_t z_exp) const
{
    if (z_exp >= rows_.size() || q_exp > q_order_) {
        return 0;
    }
    return coeff_at(rows_[z_exp], q_exp);
}

TruncSeries series_mul(const TruncSeries &a, const TruncSeries &b)
{
    if (a.q_order() != b.q_order()) {
        throw std::invalid_argument("series_mul: q orders differ (" + std::to_string(a.q_order()) + " vs "
                                    + std::to_string(b.q_order()) + ")");
    }
    std::vector<IntPoly> rows(a.z_degree() + b.z_degree() + 1);
    for (std::size_t i = 0; i <= a.z_degree(); ++i) {
        if (a.row(i).is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= b.z_degree(); ++j) {
            if (b.row(j).is_zero()) {
                continue;
            }
            rows[i + j] += truncate(a.row(i) * b.row(j), a.q_order());
        }
    }
    return TruncSeries(a.q_order(), std::move(rows));
}

TruncSeries series_geom_factor(long j, FactorSign sign, long z_step, std::size_t q_order, std::size_t z_degree)
{
    if (j < 1 || z_step < 1) {
        throw std::invalid_argument("series_geom_factor: j and z_step must be positive");
    }
    const auto zs = static_cast<std::size_t>(z_step);
    const auto qs = static_cast<std::size_t>(j) * zs;
    std::vector<IntPoly> rows(z_degree + 1);
    rows[0] = IntPoly{1};
    const std::size_t max_terms = sign == FactorSign::plus ? 1 : z_degree / zs;
    for (std::size_t t = 1; t <= max_terms; ++t) {
        const std::size_t ze = t * zs;
        const std::size_t qe = t * qs;
        if (ze > z_degree || qe > q_order) {
            break;
        }
        rows[ze] = IntPoly::monomial(1, qe);
    }
    return TruncSeries(q_order, std::move(rows));
}

} // namespace qpartid
