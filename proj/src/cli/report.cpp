#include <qpartid/cli.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace qpartid::cli
{

namespace
{

using ojson = nlohmann::ordered_json;

const std::vector<std::string> &names_for(const RunReport &report, const std::string &id)
{
    static const std::vector<std::string> none;
    auto it = report.param_names.find(id);
    return it == report.param_names.end() ? none : it->second;
}

ojson mismatch_json(const std::optional<Mismatch> &m)
{
    if (!m) {
        return nullptr;
    }
    ojson j;
    if (m->q_exponent) {
        j["q_exponent"] = *m->q_exponent;
    }
    if (m->z_exponent) {
        j["z_exponent"] = *m->z_exponent;
    }
    j["lhs"] = m->lhs.get_str();
    j["rhs"] = m->rhs.get_str();
    if (!m->note.empty()) {
        j["note"] = m->note;
    }
    return j;
}

std::string params_text(const RunReport &report, const CaseResult &r)
{
    std::string s;
    for (const auto &name : names_for(report, r.identity_case.id)) {
        if (!s.empty()) {
            s += ',';
        }
        s += name + "=" + std::to_string(r.identity_case.values.get(name));
    }
    return s;
}

std::string mismatch_text(const std::optional<Mismatch> &m)
{
    if (!m) {
        return "-";
    }
    std::string s;
    if (m->q_exponent) {
        s += "q^" + std::to_string(*m->q_exponent) + " ";
    }
    if (m->z_exponent) {
        s += "z^" + std::to_string(*m->z_exponent) + " ";
    }
    s += "lhs=" + m->lhs.get_str() + " rhs=" + m->rhs.get_str();
    if (!m->note.empty()) {
        s += " (" + m->note + ")";
    }
    return s;
}

void write_tsv(const RunReport &report, std::ostream &os)
{
    os << "id\tparams\tpass\tfirst_mismatch\tlhs_hash\trhs_hash\n";
    for (const auto &r : report.results) {
        os << r.identity_case.id << '\t' << params_text(report, r) << '\t' << (r.pass ? "true" : "false") << '\t'
           << mismatch_text(r.first_mismatch) << '\t' << r.lhs_hash << '\t' << r.rhs_hash << '\n';
    }
}

void write_human(const RunReport &report, std::ostream &os)
{
    for (const auto &t : report.timing) {
        std::size_t fails = 0;
        std::vector<const CaseResult *> shown;
        for (const auto &r : report.results) {
            if (r.identity_case.id == t.id && !r.pass) {
                ++fails;
                if (shown.size() < human_failure_limit) {
                    shown.push_back(&r);
                }
            }
        }
        os << std::left << std::setw(22) << t.id << std::right << std::setw(7) << t.cases << " cases  "
           << (fails == 0 ? "PASS" : "FAIL") << "  " << std::setw(6) << fails << " failed  " << std::fixed
           << std::setprecision(1) << std::setw(9) << t.wall_ms << " ms\n";
        for (const auto *r : shown) {
            os << "    " << params_text(report, *r) << ": " << mismatch_text(r->first_mismatch) << '\n';
        }
        if (fails > shown.size()) {
            os << "    ... " << (fails - shown.size()) << " more\n";
        }
    }
    os << "total: " << report.totals.cases << " cases, " << report.totals.passes << " passed, "
       << report.totals.failures << " failed\n";
}

} // namespace

ojson to_json(const RunReport &report)
{
    ojson j;
    j["version"] = report.version;
    j["config"] = report.config;
    ojson results = ojson::array();
    for (const auto &r : report.results) {
        ojson item;
        item["id"] = r.identity_case.id;
        ojson params = ojson::object();
        for (const auto &name : names_for(report, r.identity_case.id)) {
            params[name] = r.identity_case.values.get(name);
        }
        item["params"] = std::move(params);
        item["pass"] = r.pass;
        item["first_mismatch"] = mismatch_json(r.first_mismatch);
        item["lhs_hash"] = r.lhs_hash;
        item["rhs_hash"] = r.rhs_hash;
        results.push_back(std::move(item));
    }
    j["results"] = std::move(results);
    j["totals"] = {{"cases", report.totals.cases},
                   {"passes", report.totals.passes},
                   {"failures", report.totals.failures}};
    ojson per_id = ojson::array();
    double total_ms = 0.0;
    for (const auto &t : report.timing) {
        per_id.push_back({{"id", t.id}, {"cases", t.cases}, {"wall_ms", t.wall_ms}});
        total_ms += t.wall_ms;
    }
    j["timing"] = {{"per_identity", std::move(per_id)}, {"total_ms", total_ms}};
    return j;
}

void write_report(const RunReport &report, Format format, std::ostream &os)
{
    switch (format) {
    case Format::json:
        os << to_json(report).dump(2) << '\n';
        break;
    case Format::tsv:
        write_tsv(report, os);
        break;
    case Format::human:
        write_human(report, os);
        break;
    }
}

} // namespace qpartid::cli
