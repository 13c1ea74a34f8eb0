#include <qpartid/identities.hpp>

#include <stdexcept>
#include <string>

#include <qpartid/partitions.hpp>

namespace qpartid
{

namespace
{

TruncSeries product(long p, FactorSign sign, std::size_t q_order, std::size_t z_degree)
{
    TruncSeries acc(q_order, 0);
    for (long j = 1; j <= p; ++j) {
        acc = series_mul(acc, series_geom_factor(j, sign, 1, q_order, sign == FactorSign::plus ? 1 : z_degree));
    }
    return acc;
}

void render_row(std::string &out, const TruncSeries &s, std::size_t n, std::size_t z_degree)
{
    for (std::size_t m = 0; m <= z_degree; ++m) {
        out += s.coeff(n, m).get_str();
        out += m == z_degree ? ';' : ',';
    }
}

} // namespace

CaseResult check_genfun(long p, std::size_t q_order, std::size_t z_degree, bool inject_failure)
{
    if (p < 0) {
        throw std::invalid_argument("genfun: p must be nonnegative");
    }
    IdentityCase c{"genfun", {}, inject_failure};
    c.values.p = p;
    const TruncSeries ps = product(p, FactorSign::inverse, q_order, z_degree);
    const TruncSeries qs = product(p, FactorSign::plus, q_order, z_degree);

    // canonical text of both coefficient tables, "P:" rows then "Q:" rows
    std::string lhs_text = "P:";
    std::string rhs_text = "P:";
    std::optional<Mismatch> first;
    auto compare = [&](const TruncSeries &s, bool distinct) {
        for (std::size_t n = 0; n <= q_order; ++n) {
            render_row(lhs_text, s, n, z_degree);
            for (std::size_t m = 0; m <= z_degree; ++m) {
                const auto ln = static_cast<long>(n), lm = static_cast<long>(m);
                BigInt expected = distinct ? count_Q(ln, lm, p) : count_P(ln, lm, p);
                if (inject_failure && n == 0 && m == 0 && !distinct) {
                    expected += 1;
                }
                BigInt got = s.coeff(n, m);
                if (!first && got != expected) {
                    first = Mismatch{n, m, got, expected, distinct ? "Q product" : "P product"};
                }
                rhs_text += expected.get_str();
                rhs_text += m == z_degree ? ';' : ',';
            }
        }
    };
    compare(ps, false);
    lhs_text += "Q:";
    rhs_text += "Q:";
    compare(qs, true);
    CaseResult r{c, !first.has_value(), digest(std::string_view(lhs_text)), digest(std::string_view(rhs_text)),
                 std::move(first)};
    return r;
}

} // namespace qpartid
