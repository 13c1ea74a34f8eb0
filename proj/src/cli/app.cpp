#include <qpartid/cli.hpp>

#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include <qpartid/qbinom.hpp>

namespace qpartid::cli
{

namespace
{

const std::map<std::string, Format> format_map{{"json", Format::json}, {"tsv", Format::tsv}, {"human", Format::human}};

int emit(const RunReport &report, Format format, const std::optional<std::string> &path, std::ostream &out,
         std::ostream &err)
{
    if (path) {
        std::ofstream file(*path);
        if (!file) {
            err << "error: cannot open " << *path << " for writing\n";
            return 2;
        }
        write_report(report, format, file);
    } else {
        write_report(report, format, out);
    }
    return report.all_pass() ? 0 : 1;
}

void add_workers_option(CLI::App &cmd, unsigned &workers)
{
    cmd.add_option("--workers", workers, "Worker threads (default: available parallelism)")
        ->envname("QPARTID_WORKERS")
        ->check(CLI::PositiveNumber);
}

struct TableArgs
{
    std::string func;
    std::optional<long> n, m, p, n_max;
    Format format = Format::human;
};

// value for one row; throws UsageError on missing parameters
BigInt table_value(const TableArgs &t, long n)
{
    auto need = [&](const std::optional<long> &v, const char *flag) {
        if (!v) {
            throw UsageError("--func " + t.func + " requires " + flag);
        }
        return *v;
    };
    if (t.func == "P") return count_P(n, need(t.m, "--m"), t.p);
    if (t.func == "Q") return count_Q(n, need(t.m, "--m"), t.p);
    if (t.func == "Pstar") return count_P_star(n, need(t.m, "--m"), need(t.p, "--p"));
    if (t.func == "Qstar") return count_Q_star(n, need(t.m, "--m"), need(t.p, "--p"));
    if (t.func == "Pmost") return count_P_most(n, need(t.p, "--p"));
    if (t.func == "Qmost") return count_Q_most(n, need(t.p, "--p"));
    if (t.func == "Pn") return count_P_of(n);
    if (t.func == "Qn") return count_Q_of(n);
    throw UsageError("unknown --func " + t.func);
}

int run_table(const TableArgs &t, std::ostream &out)
{
    std::vector<long> rows;
    if (t.n) {
        rows.push_back(*t.n);
    } else if (t.n_max) {
        for (long n = 0; n <= *t.n_max; ++n) {
            rows.push_back(n);
        }
    } else {
        throw UsageError("table requires --n or --n-max");
    }
    const bool uses_m = t.func == "P" || t.func == "Q" || t.func == "Pstar" || t.func == "Qstar";
    const bool uses_p = t.func != "Pn" && t.func != "Qn";
    std::vector<BigInt> values;
    for (long n : rows) {
        values.push_back(table_value(t, n));
    }
    auto field = [](bool used, const std::optional<long> &v) -> std::string {
        if (!used) return "-";
        return v ? std::to_string(*v) : std::string("inf");
    };
    switch (t.format) {
    case Format::human:
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows.size() > 1) {
                out << rows[i] << '\t';
            }
            out << values[i] << '\n';
        }
        break;
    case Format::tsv:
        out << "n\tm\tp\tvalue\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << rows[i] << '\t' << field(uses_m, t.m) << '\t' << field(uses_p, t.p) << '\t' << values[i] << '\n';
        }
        break;
    case Format::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            arr.push_back({{"func", t.func},
                           {"n", rows[i]},
                           {"m", field(uses_m, t.m)},
                           {"p", field(uses_p, t.p)},
                           {"value", values[i].get_str()}});
        }
        out << arr.dump(2) << '\n';
        break;
    }
    }
    return 0;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact partition counts, Gaussian polynomials and identity verification", "qpartid"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    RunConfig config;
    config.workers = default_workers();
    std::string format_name = "human";
    std::string preset;

    auto *verify = app.add_subcommand("verify", "Verify identities over parameter grids");
    verify->add_option("--family", config.families, "Identity id (repeatable)")->take_all();
    verify->add_flag("--all", config.all, "Every identity in the registry");
    verify->add_option("--preset", preset, "Grid preset")->check(CLI::IsMember({"desk"}));
    verify->add_option("--n-max", config.n_max, "Override the n range to 0..N")->check(CLI::NonNegativeNumber);
    verify->add_option("--m-max", config.m_max, "Override the m range to 0..N")->check(CLI::NonNegativeNumber);
    verify->add_option("--p-max", config.p_max, "Override the p range to 0..N")->check(CLI::NonNegativeNumber);
    verify->add_option("--a-set", config.a_set, "Comma list of a values")->delimiter(',');
    verify->add_option("--b-set", config.b_set, "Comma list of b values")->delimiter(',');
    verify->add_option("--c-set", config.c_set, "Comma list of c values")->delimiter(',');
    verify->add_option("--format", format_name, "json, tsv or human")->check(CLI::IsMember({"json", "tsv", "human"}));
    verify->add_option("--out", config.out, "Write the report here instead of stdout");
    add_workers_option(*verify, config.workers);
    verify->add_option("--oracle-limit", config.oracle_limit, "Largest n the enumerator accepts");
    // test hook, deliberately undocumented
    verify->add_option("--inject-failure", config.inject_failure)->group("");

    TableArgs table_args;
    std::string table_format = "human";
    auto *table = app.add_subcommand("table", "Print exact partition counts");
    table->add_option("--func", table_args.func, "P, Q, Pstar, Qstar, Pmost, Qmost, Pn or Qn")
        ->required()
        ->check(CLI::IsMember({"P", "Q", "Pstar", "Qstar", "Pmost", "Qmost", "Pn", "Qn"}));
    table->add_option("--n", table_args.n, "n");
    table->add_option("--n-max", table_args.n_max, "Tabulate n = 0..N")->check(CLI::NonNegativeNumber);
    table->add_option("--m", table_args.m, "m (number of parts)");
    table->add_option("--p", table_args.p, "p (largest part; omitted means unbounded for P and Q)");
    table->add_option("--format", table_format, "json, tsv or human")->check(CLI::IsMember({"json", "tsv", "human"}));

    long gauss_m = 0, gauss_p = 0, gauss_base = 1;
    auto *gauss = app.add_subcommand("gauss", "Print the Gaussian polynomial [m+p, m] in base q^base");
    gauss->add_option("--m", gauss_m, "m")->required()->check(CLI::NonNegativeNumber);
    gauss->add_option("--p", gauss_p, "p")->required()->check(CLI::NonNegativeNumber);
    gauss->add_option("--base", gauss_base, "Exponent base c in q^c")->check(CLI::PositiveNumber);

    long oracle_n_max = 0;
    std::string oracle_format = "human";
    std::optional<std::string> oracle_out;
    unsigned oracle_workers = default_workers();
    long oracle_limit = default_oracle_limit;
    auto *oracle = app.add_subcommand("oracle-diff", "Compare DP counts with brute-force enumeration");
    oracle->add_option("--n-max", oracle_n_max, "Largest n")->required();
    oracle->add_option("--oracle-limit", oracle_limit, "Largest n the enumerator accepts");
    oracle->add_option("--format", oracle_format, "json, tsv or human")->check(CLI::IsMember({"json", "tsv", "human"}));
    oracle->add_option("--out", oracle_out, "Write the report here instead of stdout");
    add_workers_option(*oracle, oracle_workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            config.format = format_map.at(format_name);
            config.preset_desk = preset == "desk";
            return emit(run_verify(config), config.format, config.out, out, err);
        }
        if (table->parsed()) {
            table_args.format = format_map.at(table_format);
            return run_table(table_args, out);
        }
        if (gauss->parsed()) {
            const IntPoly g = bracket(gauss_m + gauss_p, gauss_m, gauss_base);
            out << to_string(g) << '\n' << to_coeff_list(g) << '\n';
            return 0;
        }
        if (oracle->parsed()) {
            return emit(run_oracle_diff(oracle_n_max, oracle_workers, oracle_limit), format_map.at(oracle_format),
                        oracle_out, out, err);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace qpartid::cli
