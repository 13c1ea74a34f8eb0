#include <qpartid/cli.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace qpartid::cli
{

namespace
{

std::vector<long> upto(long hi)
{
    std::vector<long> v;
    for (long i = 0; i <= hi; ++i) {
        v.push_back(i);
    }
    return v;
}

std::vector<long> tuple_of(const CaseResult &r, const std::vector<std::string> &names)
{
    std::vector<long> t;
    t.reserve(names.size());
    for (const auto &name : names) {
        t.push_back(r.identity_case.values.get(name));
    }
    return t;
}

void sort_results(RunReport &report)
{
    std::stable_sort(report.results.begin(), report.results.end(), [&](const CaseResult &x, const CaseResult &y) {
        if (x.identity_case.id != y.identity_case.id) {
            return x.identity_case.id < y.identity_case.id;
        }
        const auto &names = report.param_names.at(x.identity_case.id);
        return tuple_of(x, names) < tuple_of(y, names);
    });
    std::sort(report.timing.begin(), report.timing.end(),
              [](const IdentityTiming &x, const IdentityTiming &y) { return x.id < y.id; });
}

void tally(RunReport &report)
{
    report.totals = {};
    for (const auto &r : report.results) {
        ++report.totals.cases;
        if (r.pass) {
            ++report.totals.passes;
        } else {
            ++report.totals.failures;
        }
    }
}

const char *format_name(Format f)
{
    switch (f) {
    case Format::json:
        return "json";
    case Format::tsv:
        return "tsv";
    case Format::human:
        return "human";
    }
    return "human";
}

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T> &v)
{
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

} // namespace

unsigned default_workers()
{
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

void validate(const RunConfig &config)
{
    if (!config.all && config.families.empty()) {
        throw UsageError("select identities with --family ID (repeatable) or --all");
    }
    for (const auto &id : config.families) {
        if (find_descriptor(id) == nullptr) {
            throw UsageError("unknown identity family '" + id + "'");
        }
    }
    if (config.inject_failure && find_descriptor(*config.inject_failure) == nullptr) {
        throw UsageError("unknown identity family '" + *config.inject_failure + "'");
    }
    for (const auto *bound : {&config.n_max, &config.m_max, &config.p_max}) {
        if (*bound && **bound < 0) {
            throw UsageError("range maxima must be nonnegative");
        }
    }
    auto check_set = [](const std::optional<std::vector<long>> &set, long min, const char *flag) {
        if (!set) {
            return;
        }
        if (set->empty()) {
            throw UsageError(std::string(flag) + " must not be empty");
        }
        for (long x : *set) {
            if (x < min) {
                throw UsageError(std::string(flag) + " values must be >= " + std::to_string(min));
            }
        }
    };
    check_set(config.a_set, 0, "--a-set");
    check_set(config.b_set, 1, "--b-set");
    check_set(config.c_set, 1, "--c-set");
    if (config.workers == 0) {
        throw UsageError("--workers must be at least 1");
    }
}

std::vector<std::string> selected_ids(const RunConfig &config)
{
    std::vector<std::string> ids;
    for (const auto &d : registry()) {
        const bool chosen =
            config.all || std::find(config.families.begin(), config.families.end(), d.id) != config.families.end();
        if (chosen) {
            ids.push_back(d.id);
        }
    }
    return ids;
}

Grid effective_grid(const IdentityDescriptor &d, const RunConfig &config)
{
    Grid grid = d.default_grid;
    auto override_axis = [&](const char *name, const auto &value, auto &&to_axis) {
        if (value && grid.contains(name)) {
            grid[name] = to_axis(*value);
        }
    };
    override_axis("n", config.n_max, upto);
    override_axis("m", config.m_max, upto);
    override_axis("p", config.p_max, upto);
    auto same = [](const std::vector<long> &v) { return v; };
    override_axis("a", config.a_set, same);
    override_axis("b", config.b_set, same);
    override_axis("c", config.c_set, same);
    return grid;
}

std::vector<CaseResult> evaluate_parallel(const std::vector<IdentityCase> &cases,
                                          const std::function<CaseResult(const IdentityCase &)> &fn,
                                          unsigned workers)
{
    std::vector<std::optional<CaseResult>> slots(cases.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) {
                return;
            }
            try {
                slots[i] = fn(cases[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(cases.size());
                return;
            }
        }
    };
    const unsigned n_threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cases.size())));
    if (n_threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::vector<CaseResult> out;
    out.reserve(cases.size());
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

RunReport run_verify(const RunConfig &config)
{
    validate(config);
    RunReport report;
    const auto ids = selected_ids(config);

    auto &cfg = report.config;
    cfg["families"] = ids;
    cfg["all"] = config.all;
    cfg["preset"] = config.preset_desk ? nlohmann::ordered_json("desk") : nlohmann::ordered_json(nullptr);
    cfg["n_max"] = opt_json(config.n_max);
    cfg["m_max"] = opt_json(config.m_max);
    cfg["p_max"] = opt_json(config.p_max);
    cfg["a_set"] = opt_json(config.a_set);
    cfg["b_set"] = opt_json(config.b_set);
    cfg["c_set"] = opt_json(config.c_set);
    cfg["format"] = format_name(config.format);
    cfg["workers"] = config.workers;
    cfg["oracle_limit"] = config.oracle_limit;
    if (config.inject_failure) {
        cfg["inject_failure"] = *config.inject_failure;
    }

    for (const auto &id : ids) {
        const IdentityDescriptor &d = *find_descriptor(id);
        report.param_names[id] = d.params;
        auto cases = expand_grid(d, effective_grid(d, config));
        if (config.inject_failure == id && !cases.empty()) {
            cases.front().inject_failure = true;
        }
        const auto start = std::chrono::steady_clock::now();
        auto results = evaluate_parallel(cases, d.check, config.workers);
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        report.timing.push_back({id, cases.size(), elapsed.count()});
        std::move(results.begin(), results.end(), std::back_inserter(report.results));
    }
    sort_results(report);
    tally(report);
    return report;
}

RunReport run_oracle_diff(long n_max, unsigned workers, long oracle_limit)
{
    if (n_max < 0) {
        throw UsageError("--n-max must be nonnegative");
    }
    if (n_max > oracle_limit) {
        throw UsageError("--n-max " + std::to_string(n_max) + " exceeds the oracle limit " + std::to_string(oracle_limit));
    }
    if (workers == 0) {
        throw UsageError("--workers must be at least 1");
    }
    RunReport report;
    report.config["command"] = "oracle-diff";
    report.config["n_max"] = n_max;
    report.config["workers"] = workers;
    report.config["oracle_limit"] = oracle_limit;
    report.param_names["oracle"] = {"n", "m", "p"};

    std::vector<IdentityCase> cases;
    for (long n = 0; n <= n_max; ++n) {
        for (long m = 0; m <= n; ++m) {
            for (long p = 0; p <= n; ++p) {
                IdentityCase c{"oracle", {}, false};
                c.values.n = n;
                c.values.m = m;
                c.values.p = p;
                cases.push_back(c);
            }
        }
    }
    auto check = [oracle_limit](const IdentityCase &c) {
        const auto &v = c.values;
        PartitionSpec spec{v.n, v.m, std::nullopt, v.p, false};
        const BigInt enum_p = static_cast<unsigned long>(enumerate(spec, oracle_limit).size());
        spec.distinct = true;
        const BigInt enum_q = static_cast<unsigned long>(enumerate(spec, oracle_limit).size());
        const BigInt dp_p = count_P(v.n, v.m, v.p);
        const BigInt dp_q = count_Q(v.n, v.m, v.p);
        const std::string lhs = "P=" + dp_p.get_str() + ",Q=" + dp_q.get_str();
        const std::string rhs = "P=" + enum_p.get_str() + ",Q=" + enum_q.get_str();
        CaseResult r{c, dp_p == enum_p && dp_q == enum_q, digest(std::string_view(lhs)), digest(std::string_view(rhs)),
                     std::nullopt};
        if (dp_p != enum_p) {
            r.first_mismatch = Mismatch{std::nullopt, std::nullopt, dp_p, enum_p, "P vs enumeration"};
        } else if (dp_q != enum_q) {
            r.first_mismatch = Mismatch{std::nullopt, std::nullopt, dp_q, enum_q, "Q vs enumeration"};
        }
        return r;
    };
    const auto start = std::chrono::steady_clock::now();
    report.results = evaluate_parallel(cases, check, workers);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    report.timing.push_back({"oracle", cases.size(), elapsed.count()});
    sort_results(report);
    tally(report);
    return report;
}

} // namespace qpartid::cli
