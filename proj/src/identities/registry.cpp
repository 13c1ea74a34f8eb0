#include <qpartid/identities.hpp>

#include <cstdio>
#include <numeric>

namespace qpartid
{

namespace
{

std::vector<long> upto(long hi)
{
    std::vector<long> v(static_cast<std::size_t>(hi + 1));
    std::iota(v.begin(), v.end(), 0L);
    return v;
}

constexpr std::size_t genfun_q_order = 30;
constexpr std::size_t genfun_z_degree = 8;

std::vector<IdentityDescriptor> build()
{
    std::vector<IdentityDescriptor> r;
    auto add = [&r](std::string id, IdentityKind kind, std::vector<std::string> params, Grid grid,
                    std::function<CaseResult(const IdentityCase &)> check) {
        r.push_back({std::move(id), kind, std::move(params), std::move(grid), std::move(check)});
    };

    const Grid nm10{{"n", upto(10)}, {"m", upto(10)}};
    add("delta", IdentityKind::q_polynomial, {"n", "m"}, nm10, check_q_identity);
    for (int i = 1; i <= 6; ++i) {
        add("result" + std::to_string(i), IdentityKind::q_polynomial, {"n", "m"}, nm10, check_q_identity);
    }
    const Grid resdbl_grid{{"n", upto(6)}, {"m", upto(6)}, {"p", upto(6)},
                           {"a", {0, 1, 2}}, {"b", {1, 2}},   {"c", {1, 2}}};
    for (int i = 1; i <= 4; ++i) {
        add("resdbl" + std::to_string(i), IdentityKind::q_polynomial, {"n", "m", "p", "a", "b", "c"}, resdbl_grid,
            check_q_identity);
    }
    const Grid nm8{{"n", upto(8)}, {"m", upto(8)}};
    for (const char *id : {"corollary_2_4", "corollary_2_4_odd", "corollary_3_4", "corollary_3_4_odd"}) {
        add(id, IdentityKind::q_polynomial, {"n", "m"}, nm8, check_q_identity);
    }
    const Grid f_grid{{"n", upto(8)}, {"m", upto(8)}, {"p", upto(5)}};
    for (SignOn sign : {SignOn::k, SignOn::l}) {
        add(sign == SignOn::k ? "f_theorem_k" : "f_theorem_l", IdentityKind::q_polynomial, {"n", "m", "p"}, f_grid,
            [sign](const IdentityCase &c) {
                const Params &v = c.values;
                return compare_sides(c, f_theorem_sides(f_family(v.p, v.n), v.n, v.m, sign));
            });
    }

    const Grid count_grid{{"n", upto(12)}, {"m", upto(12)}, {"p", upto(8)}};
    for (const char *id : {"theorem1", "theorem2", "theorem3", "theorem6", "theorem7", "theorem8", "theorem9",
                           "theorem_simple", "qstar_relation"}) {
        add(id, IdentityKind::count_integer, {"n", "m", "p"}, count_grid, check_count_identity);
    }
    add("pn_from_q", IdentityKind::count_integer, {"n"}, {{"n", upto(40)}}, check_count_identity);
    add("qn_double_sum", IdentityKind::count_integer, {"n"}, {{"n", upto(40)}}, check_count_identity);
    add("pmost_chain", IdentityKind::count_integer, {"n", "p"}, {{"n", upto(15)}, {"p", upto(15)}},
        check_count_identity);
    add("sine_vanishing_6", IdentityKind::count_integer, {"n", "m", "p"}, count_grid, check_sine_vanishing);
    add("sine_vanishing_7", IdentityKind::count_integer, {"n", "m", "p"}, count_grid, check_sine_vanishing);
    const Grid corr_grid{{"n", upto(15)}, {"m", upto(15)}, {"p", upto(15)}};
    add("pnmp_correspondence", IdentityKind::count_integer, {"n", "m", "p"}, corr_grid, check_count_identity);
    add("qnmp_correspondence", IdentityKind::count_integer, {"n", "m", "p"}, corr_grid, check_count_identity);
    add("genfun", IdentityKind::count_integer, {"p"}, {{"p", upto(6)}}, [](const IdentityCase &c) {
        CaseResult res = check_genfun(c.values.p, genfun_q_order, genfun_z_degree, c.inject_failure);
        res.identity_case = c;
        return res;
    });

    for (int i = 1; i <= combinatorial_count; ++i) {
        char id[8];
        std::snprintf(id, sizeof id, "comb%02d", i);
        if (i <= 19) {
            add(id, IdentityKind::combinatorial_q1, {"n", "m"}, {{"n", upto(20)}, {"m", upto(20)}},
                check_combinatorial);
        } else {
            add(id, IdentityKind::combinatorial_q1, {"n", "m", "p"},
                {{"n", upto(20)}, {"m", upto(20)}, {"p", upto(12)}}, check_combinatorial);
        }
    }
    return r;
}

} // namespace

const std::vector<IdentityDescriptor> &registry()
{
    static const std::vector<IdentityDescriptor> reg = build();
    return reg;
}

const IdentityDescriptor *find_descriptor(std::string_view id)
{
    for (const auto &d : registry()) {
        if (d.id == id) {
            return &d;
        }
    }
    return nullptr;
}

} // namespace qpartid
