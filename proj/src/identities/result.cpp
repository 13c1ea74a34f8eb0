#include <qpartid/identities.hpp>

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace qpartid
{

std::string_view to_string(IdentityKind kind)
{
    switch (kind) {
    case IdentityKind::q_polynomial:
        return "q_polynomial";
    case IdentityKind::count_integer:
        return "count_integer";
    case IdentityKind::combinatorial_q1:
        return "combinatorial_q1";
    }
    return "unknown";
}

namespace
{

template <typename P>
auto &field(P &v, std::string_view name)
{
    if (name == "n") return v.n;
    if (name == "m") return v.m;
    if (name == "p") return v.p;
    if (name == "a") return v.a;
    if (name == "b") return v.b;
    if (name == "c") return v.c;
    throw std::invalid_argument("unknown parameter name '" + std::string(name) + "'");
}

} // namespace

long Params::get(std::string_view name) const
{
    return field(*this, name);
}

void Params::set(std::string_view name, long value)
{
    field(*this, name) = value;
}

std::string digest(std::string_view canonical)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(canonical.data(), canonical.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i) {
        os << std::setw(2) << static_cast<int>(md[i]);
    }
    return os.str();
}

std::string digest(const IntPoly &p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != 0) {
            s += ',';
        }
        s += p.coeffs()[i].get_str();
    }
    return digest(std::string_view(s));
}

std::string digest(const BigInt &x)
{
    return digest(std::string_view(x.get_str()));
}

CaseResult compare_sides(const IdentityCase &c, Sides<IntPoly> sides)
{
    if (c.inject_failure) {
        sides.rhs += IntPoly{1};
    }
    CaseResult r{c, sides.lhs == sides.rhs, digest(sides.lhs), digest(sides.rhs), std::nullopt};
    if (!r.pass) {
        const std::size_t len = std::max(sides.lhs.size(), sides.rhs.size());
        for (std::size_t i = 0; i < len; ++i) {
            BigInt l = coeff_at(sides.lhs, i);
            BigInt rr = coeff_at(sides.rhs, i);
            if (l != rr) {
                r.first_mismatch = Mismatch{i, std::nullopt, std::move(l), std::move(rr), {}};
                break;
            }
        }
    }
    return r;
}

CaseResult compare_sides(const IdentityCase &c, Sides<BigInt> sides)
{
    if (c.inject_failure) {
        sides.rhs += 1;
    }
    CaseResult r{c, sides.lhs == sides.rhs, digest(sides.lhs), digest(sides.rhs), std::nullopt};
    if (!r.pass) {
        r.first_mismatch = Mismatch{std::nullopt, std::nullopt, sides.lhs, sides.rhs, {}};
    }
    return r;
}

std::vector<IdentityCase> expand_grid(const IdentityDescriptor &d, const Grid &grid)
{
    std::vector<std::vector<long>> axes;
    axes.reserve(d.params.size());
    for (const auto &name : d.params) {
        auto it = grid.find(name);
        if (it == grid.end()) {
            axes.push_back({Params{}.get(name)});
        } else {
            std::vector<long> values = it->second;
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
            axes.push_back(std::move(values));
        }
    }
    std::vector<IdentityCase> cases;
    for (const auto &axis : axes) {
        if (axis.empty()) {
            return cases;
        }
    }
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        IdentityCase c{d.id, {}, false};
        for (std::size_t i = 0; i < axes.size(); ++i) {
            c.values.set(d.params[i], axes[i][idx[i]]);
        }
        cases.push_back(std::move(c));
        // odometer, last parameter fastest
        std::size_t pos = axes.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < axes[pos].size()) {
                break;
            }
            idx[pos] = 0;
            if (pos == 0) {
                return cases;
            }
        }
        if (axes.empty()) {
            return cases;
        }
    }
}

} // namespace qpartid
