// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <qpartid/binomial.hpp>
#include <qpartid/identities.hpp>
#include <qpartid/partitions.hpp>
#include <qpartid/qbinom.hpp>

#include "process.hpp"

using namespace qpartid;

namespace
{

struct Outcome
{
    bool pass = true;
    std::string detail;
};

std::vector<long> upto(long hi)
{
    std::vector<long> v(static_cast<std::size_t>(hi + 1));
    std::iota(v.begin(), v.end(), 0L);
    return v;
}

// Runs a registry family over an explicit grid; appends "id: k/N" to detail.
void run_family(const std::string &id, const Grid &grid, Outcome &o, std::size_t &cases)
{
    const IdentityDescriptor *d = find_descriptor(id);
    if (d == nullptr) {
        o.pass = false;
        o.detail += id + " missing; ";
        return;
    }
    std::size_t failed = 0;
    const auto expanded = expand_grid(*d, grid);
    for (const auto &c : expanded) {
        if (!d->check(c).pass) {
            if (failed == 0) {
                std::ostringstream s;
                s << id << " fails at n=" << c.values.n << " m=" << c.values.m << " p=" << c.values.p << "; ";
                o.detail += s.str();
            }
            ++failed;
        }
    }
    cases += expanded.size();
    if (failed != 0) {
        o.pass = false;
    }
}

Outcome oracle_equivalence()
{
    Outcome o;
    std::size_t cases = 0;
    for (long n = 0; n <= 20; ++n) {
        for (long m = 0; m <= n; ++m) {
            for (long p = 0; p <= n; ++p) {
                for (bool distinct : {false, true}) {
                    const BigInt dp = distinct ? count_Q(n, m, p) : count_P(n, m, p);
                    const auto listed = enumerate({n, m, std::nullopt, p, distinct}, 20);
                    ++cases;
                    if (dp != static_cast<unsigned long>(listed.size())) {
                        o.pass = false;
                    }
                }
            }
        }
    }
    o.detail = std::to_string(cases) + " (n, m, p, distinct) counts";
    return o;
}

Outcome gaussian_properties()
{
    Outcome o;
    for (long m = 0; m <= 10; ++m) {
        for (long p = 0; p <= 10; ++p) {
            const IntPoly g = gaussian(m, p);
            const auto c = g.coeffs();
            bool ok = g.degree() == static_cast<std::size_t>(m * p);
            for (std::size_t i = 0; ok && i < c.size(); ++i) {
                ok = c[i] == c[c.size() - 1 - i] && c[i] == count_P_star(static_cast<long>(i), m, p);
            }
            ok = ok && eval(g, 1) == binomial(m + p, m) && g == gaussian(p, m);
            IntPoly lhs = g, rhs{1};
            for (long i = 1; i <= m; ++i) {
                lhs = lhs * (IntPoly{1} - IntPoly::monomial(1, static_cast<std::size_t>(i)));
                rhs = rhs * (IntPoly{1} - IntPoly::monomial(1, static_cast<std::size_t>(p + i)));
            }
            ok = ok && lhs == rhs;
            if (!ok) {
                o.pass = false;
                o.detail += "m=" + std::to_string(m) + " p=" + std::to_string(p) + "; ";
            }
        }
    }
    if (o.pass) {
        o.detail = "121 (m, p) pairs";
    }
    return o;
}

Outcome correspondences()
{
    Outcome o;
    std::size_t cases = 0;
    for (long n = 0; n <= 15; ++n) {
        for (long m = 0; m <= 15; ++m) {
            for (long p = 0; p <= 15; ++p) {
                cases += 2;
                if (!check_pnmp_correspondence(n, m, p) || !check_qnmp_correspondence(n, m, p)) {
                    o.pass = false;
                }
            }
        }
    }
    o.detail = std::to_string(cases) + " checks";
    return o;
}

Outcome generating_functions()
{
    Outcome o;
    for (long p = 0; p <= 6; ++p) {
        if (!check_genfun(p, 30, 8).pass) {
            o.pass = false;
            o.detail += "p=" + std::to_string(p) + "; ";
        }
    }
    if (o.pass) {
        o.detail = "p = 0..6 at q^30 z^8";
    }
    return o;
}

Outcome count_identities()
{
    Outcome o;
    std::size_t cases = 0;
    const Grid g{{"n", upto(12)}, {"m", upto(12)}, {"p", upto(8)}};
    for (const char *id : {"theorem1", "theorem2", "theorem3", "theorem6", "theorem7", "theorem8", "theorem9",
                           "theorem_simple", "qstar_relation", "sine_vanishing_6", "sine_vanishing_7"}) {
        run_family(id, g, o, cases);
    }
    run_family("pmost_chain", {{"n", upto(15)}, {"p", upto(15)}}, o, cases);
    run_family("pn_from_q", {{"n", upto(40)}}, o, cases);
    run_family("qn_double_sum", {{"n", upto(40)}}, o, cases);
    o.detail += std::to_string(cases) + " cases";
    return o;
}

Outcome q_identities()
{
    Outcome o;
    std::size_t cases = 0;
    const Grid nm10{{"n", upto(10)}, {"m", upto(10)}};
    for (const char *id : {"delta", "result1", "result2", "result3", "result4", "result5", "result6"}) {
        run_family(id, nm10, o, cases);
    }
    const Grid rg{{"n", upto(6)}, {"m", upto(6)}, {"p", upto(6)}, {"a", {0, 1, 2}}, {"b", {1, 2}}, {"c", {1, 2}}};
    for (const char *id : {"resdbl1", "resdbl2", "resdbl3", "resdbl4"}) {
        run_family(id, rg, o, cases);
    }
    const Grid nm8{{"n", upto(8)}, {"m", upto(8)}};
    for (const char *id : {"corollary_2_4", "corollary_2_4_odd", "corollary_3_4", "corollary_3_4_odd"}) {
        run_family(id, nm8, o, cases);
    }
    // the corollaries again, obtained mechanically from resdbl2 / resdbl3
    for (auto make : {corollary_2_4_derivation, corollary_3_4_derivation}) {
        for (Combination comb : {Combination::even, Combination::odd}) {
            const auto d = derive_even_sum_corollary(make(comb));
            for (const auto &c : expand_grid(d, nm8)) {
                ++cases;
                if (!d.check(c).pass) {
                    o.pass = false;
                    o.detail += d.id + " derivation fails; ";
                    break;
                }
            }
        }
    }
    o.detail += std::to_string(cases) + " cases";
    return o;
}

Outcome f_theorem()
{
    Outcome o;
    std::size_t cases = 0;
    const Grid fg{{"n", upto(8)}, {"m", upto(8)}, {"p", upto(5)}};
    run_family("f_theorem_k", fg, o, cases);
    run_family("f_theorem_l", fg, o, cases);
    const Grid rg{{"n", upto(6)}, {"m", upto(6)}, {"p", upto(6)}, {"a", {0, 1, 2}}, {"b", {1, 2}}, {"c", {1, 2}}};
    for (int which = 1; which <= 4; ++which) {
        const std::string id = "resdbl" + std::to_string(which);
        for (const auto &c : expand_grid(*find_descriptor(id), rg)) {
            const Params &v = c.values;
            const auto direct = q_identity_sides(id, v);
            const auto via = f_theorem_sides(resdbl_f_sequence(which, v), v.n, v.m, which % 2 ? SignOn::k : SignOn::l, v.b);
            ++cases;
            if (direct.lhs != via.lhs || direct.rhs != via.rhs) {
                o.pass = false;
                o.detail += id + " instantiation differs; ";
                break;
            }
        }
    }
    o.detail += std::to_string(cases) + " cases";
    return o;
}

Outcome combinatorial()
{
    Outcome o;
    std::size_t cases = 0;
    std::size_t families = 0;
    for (const auto &d : registry()) {
        if (d.kind != IdentityKind::combinatorial_q1) {
            continue;
        }
        ++families;
        Grid g{{"n", upto(20)}, {"m", upto(20)}};
        if (std::find(d.params.begin(), d.params.end(), "p") != d.params.end()) {
            g["p"] = upto(12);
        }
        run_family(d.id, g, o, cases);
    }
    const auto anchor = combinatorial_sides("comb02", Params{3, 2, 0, 0, 1, 1});
    if (anchor.lhs != 28 || anchor.rhs != 28) {
        o.pass = false;
        o.detail += "anchor comb02(m=2, n=3) != 28; ";
    }
    if (families != static_cast<std::size_t>(combinatorial_count)) {
        o.pass = false;
    }
    o.detail += std::to_string(families) + " identities, " + std::to_string(cases) + " cases";
    return o;
}

Outcome cli_contract()
{
    Outcome o;
    const auto desk = test_support::run_process(QPARTID_BINARY, "verify --all --preset desk --format json");
    std::size_t desk_cases = 0;
    if (desk.exit_code != 0) {
        o.pass = false;
        o.detail += "desk run exit " + std::to_string(desk.exit_code) + "; ";
    } else {
        desk_cases = nlohmann::json::parse(desk.out)["totals"]["cases"].get<std::size_t>();
    }
    const auto injected = test_support::run_process(
        QPARTID_BINARY, "verify --family result2 --n-max 3 --m-max 3 --inject-failure result2 --format json");
    bool failing_case_reported = false;
    if (injected.exit_code == 1) {
        const auto report = nlohmann::json::parse(injected.out);
        for (const auto &item : report["results"]) {
            if (!item["pass"].get<bool>() && item["id"] == "result2" && !item["first_mismatch"].is_null()) {
                failing_case_reported = true;
            }
        }
    }
    if (!failing_case_reported) {
        o.pass = false;
        o.detail += "injected failure exit " + std::to_string(injected.exit_code) + "; ";
    }
    const auto unknown = test_support::run_process(QPARTID_BINARY, "verify --family no_such_id");
    if (unknown.exit_code != 2) {
        o.pass = false;
        o.detail += "unknown family exit " + std::to_string(unknown.exit_code) + "; ";
    }
    o.detail += "desk preset " + std::to_string(desk_cases) + " cases; exit codes 0/1/2 checked";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence, n <= 20", oracle_equivalence},
        {"Gaussian polynomial properties, m, p <= 10", gaussian_properties},
        {"P/Q correspondences, n, m, p <= 15", correspondences},
        {"generating functions, p <= 6", generating_functions},
        {"partition-count identities", count_identities},
        {"q-polynomial identities and corollaries", q_identities},
        {"F-theorem, both sign variants", f_theorem},
        {"combinatorial identities, m, n <= 20", combinatorial},
        {"CLI contract", cli_contract},
    };
    int failures = 0;
    int index = 0;
    for (const auto &[name, fn] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs.count());
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << index << ": " << name << " (" << o.detail << ", "
                  << timing << ")" << std::endl;
        if (!o.pass) {
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
