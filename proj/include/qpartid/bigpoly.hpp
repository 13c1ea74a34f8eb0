#ifndef QPARTID_BIGPOLY_HPP
#define QPARTID_BIGPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qpartid
{

using BigInt = mpz_class;

// Dense univariate polynomial in q with arbitrary-precision coefficients.
// coeffs()[i] is the coefficient of q^i. The representation is kept canonical:
// either empty (the zero polynomial) or with a nonzero leading coefficient.
class IntPoly
{
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const BigInt &c);
    // c * q^e
    static IntPoly monomial(const BigInt &c, std::size_t e);

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    // nullopt for the zero polynomial.
    [[nodiscard]] std::optional<std::size_t> degree() const noexcept;
    [[nodiscard]] std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

    IntPoly &operator+=(const IntPoly &other);
    IntPoly &operator-=(const IntPoly &other);

    friend bool operator==(const IntPoly &, const IntPoly &) = default;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

IntPoly operator+(IntPoly a, const IntPoly &b);
IntPoly operator-(IntPoly a, const IntPoly &b);
IntPoly operator-(IntPoly a);
IntPoly operator*(const IntPoly &a, const IntPoly &b);

IntPoly scale(const IntPoly &a, const BigInt &c);
// Multiplication by q^e.
IntPoly shift(const IntPoly &a, std::size_t e);
// a(q^c); throws std::invalid_argument for c == 0.
IntPoly substitute_power(const IntPoly &a, long c);
// Drops every coefficient of q^i with i > order.
IntPoly truncate(const IntPoly &a, std::size_t order);

// [q^n] a, zero beyond the degree.
BigInt coeff_at(const IntPoly &a, std::size_t n);
BigInt eval(const IntPoly &a, const BigInt &x);

// "1 + q + 2q^2 - q^5"; "0" for the zero polynomial.
std::string to_string(const IntPoly &a);
// "[1, 1, 2, 0, 0, -1]"; "[]" for the zero polynomial.
std::string to_coeff_list(const IntPoly &a);
std::ostream &operator<<(std::ostream &os, const IntPoly &a);

// Bivariate series sum_m z^m row_m(q), with every row truncated at q^q_order and
// the z-degree tracked exactly (rows beyond the last nonzero one may be zero).
class TruncSeries
{
public:
    // The constant series 1.
    TruncSeries(std::size_t q_order, std::size_t z_degree);
    TruncSeries(std::size_t q_order, std::vector<IntPoly> rows);

    [[nodiscard]] std::size_t q_order() const noexcept { return q_order_; }
    [[nodiscard]] std::size_t z_degree() const noexcept { return rows_.size() - 1; }
    [[nodiscard]] const IntPoly &row(std::size_t z_exp) const { return rows_.at(z_exp); }
    // [q^n z^m]; zero outside the stored range.
    [[nodiscard]] BigInt coeff(std::size_t q_exp, std::size_t z_exp) const;

    friend bool operator==(const TruncSeries &, const TruncSeries &) = default;

private:
    std::size_t q_order_;
    std::vector<IntPoly> rows_;
};

// Throws std::invalid_argument if the q orders differ.
TruncSeries series_mul(const TruncSeries &a, const TruncSeries &b);

enum class FactorSign
{
    plus,    // 1 + z^s q^{j s}
    inverse, // 1 / (1 - z^s q^{j s}), expanded geometrically
};

// Single factor of the products prod (1 + z q^j) and prod 1/(1 - z q^j), with z
// replaced by z^z_step and q by q^z_step. Throws std::invalid_argument if j or
// z_step is zero.
TruncSeries series_geom_factor(long j, FactorSign sign, long z_step, std::size_t q_order,
                               std::size_t z_degree);

} // namespace qpartid

#endif
