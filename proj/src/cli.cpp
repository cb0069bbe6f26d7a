#include "bpf/cli.hpp"

#include "bpf/serialize.hpp"
#include "bpf/series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace bpf::cli {

namespace {

struct RawOptions {
    std::optional<std::string> a;
    std::optional<std::string> b;
    std::optional<std::string> w0;
    std::optional<std::string> w1;
    std::optional<std::string> grid;
    long n_max = 20;
    std::vector<long> r_values;
    long order = 40;
    std::string output = "json";
    std::optional<std::string> out_path;
    bool octonion = false;
    bool negative = false;
};

void add_common_options(CLI::App& app, RawOptions& raw) {
    const auto last = CLI::MultiOptionPolicy::TakeLast;
    app.add_option("--a", raw.a, "coefficient used at even indices (\"p\" or \"p/q\")")
        ->multi_option_policy(last);
    app.add_option("--b", raw.b, "coefficient used at odd indices")->multi_option_policy(last);
    app.add_option("--w0", raw.w0, "initial value w_0")->multi_option_policy(last);
    app.add_option("--w1", raw.w1, "initial value w_1")->multi_option_policy(last);
    app.add_option("--grid", raw.grid, "parameter tuples \"a,b,w0,w1;...\"")->multi_option_policy(last);
    app.add_option("--n-max", raw.n_max, "largest index n")
        ->check(CLI::NonNegativeNumber)
        ->multi_option_policy(last);
    app.add_option("--r", raw.r_values, "Catalan offsets r (default: all admissible)");
    app.add_option("--order", raw.order, "truncation order of generating functions")
        ->check(CLI::NonNegativeNumber)
        ->multi_option_policy(last);
    app.add_option("--output", raw.output, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->multi_option_policy(last);
    app.add_option("--out", raw.out_path, "write to this file instead of stdout")->multi_option_policy(last);
    app.add_flag("--octonion", raw.octonion, "octonion instead of quaternion output");
    app.add_flag("--negative", raw.negative, "also emit negative indices down to -n-max");
    app.add_option("--config", "key=value configuration file; command-line flags take precedence")
        ->check(CLI::ExistingFile);
}

/// Expands "--config FILE" into the equivalent flags, placed right after
/// the subcommand so later command-line flags override them.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        std::size_t consumed = 0;
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            consumed = 2;
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            consumed = 1;
        } else {
            continue;
        }
        std::vector<std::string> injected;
        for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(path)) {
            if (item.name == "++" || item.name == "--") {
                continue;
            }
            const bool is_flag = item.name == "octonion" || item.name == "negative";
            if (is_flag) {
                if (item.inputs.empty() || item.inputs.front() == "true" || item.inputs.front() == "1") {
                    injected.push_back("--" + item.name);
                }
                continue;
            }
            for (const std::string& value : item.inputs) {
                injected.push_back("--" + item.name);
                injected.push_back(value);
            }
        }
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                   args.begin() + static_cast<std::ptrdiff_t>(i + consumed));
        const auto at = args.empty() ? args.begin() : args.begin() + 1;
        args.insert(at, injected.begin(), injected.end());
        return args;
    }
    return args;
}

Params single_point(const RawOptions& raw) {
    return Params(Rational::parse(raw.a.value_or("1")), Rational::parse(raw.b.value_or("1")),
                  Rational::parse(raw.w0.value_or("0")), Rational::parse(raw.w1.value_or("1")));
}

RunConfig validate(const RawOptions& raw, bool grid_command) {
    RunConfig config;
    const bool point_given = raw.a || raw.b || raw.w0 || raw.w1;
    if (raw.grid) {
        config.grid = parse_grid(*raw.grid);
    } else if (grid_command && !point_given) {
        config.grid = default_grid();
        config.default_grid = true;
    } else {
        config.grid = {single_point(raw)};
    }
    config.n_max = raw.n_max;
    config.r_values = raw.r_values;
    for (long r : config.r_values) {
        if (r < 0) {
            throw std::invalid_argument("r must be nonnegative");
        }
    }
    config.order = static_cast<std::size_t>(raw.order);
    config.output = raw.output == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    config.out_path = raw.out_path;
    config.octonion = raw.octonion;
    config.negative = raw.negative;
    config.workers = worker_count_from_env();
    return config;
}

/// Output sink honoring --out.
class Sink {
public:
    Sink(const RunConfig& config, std::ostream& fallback) : stream_(&fallback) {
        if (config.out_path) {
            file_.open(*config.out_path);
            if (!file_) {
                throw std::invalid_argument("cannot open output file " + *config.out_path);
            }
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

IdentityReport binet_report(const std::string& name, const Params& params, long n, nlohmann::json lhs,
                            nlohmann::json rhs) {
    IdentityReport report{name, params, {{"n", n}}, std::move(lhs), std::move(rhs), false, true, true,
                          std::nullopt};
    report.equal = report.lhs == report.rhs;
    if (!params.positive_setting()) {
        report.add_note("outside positive-parameter setting");
    }
    return report;
}

template <typename F>
void guarded(std::vector<IdentityReport>& out, const std::string& name, const Params& params,
             std::map<std::string, long> indices, F&& check) {
    try {
        check();
    } catch (const std::exception& e) {
        IdentityReport failed{name, params, std::move(indices), nullptr, nullptr, false, true, true,
                              std::nullopt};
        failed.add_note(std::string("error: ") + e.what());
        out.push_back(std::move(failed));
    }
}

std::vector<long> offsets_for(long n, const std::vector<long>& r_values) {
    std::vector<long> out;
    if (r_values.empty()) {
        for (long r = 0; r <= n; ++r) {
            out.push_back(r);
        }
    } else {
        for (long r : r_values) {
            if (r <= n) {
                out.push_back(r);
            }
        }
    }
    return out;
}

nlohmann::json parity_row_json(const ParityMapRow& row) {
    return {{"type", "parity_map"},     {"grid_index", row.grid_index}, {"params", to_json(row.params)},
            {"r_parity", row.r_odd ? "odd" : "even"}, {"checks", row.checks},
            {"equal", row.equal}};
}

}  // namespace

std::vector<Params> default_grid() {
    const std::vector<std::pair<Rational, Rational>> ab = {
        {Rational(1), Rational(1)}, {Rational(2), Rational(1)}, {Rational(1), Rational(2)},
        {Rational(2), Rational(3)}, {Rational(1), Rational(-3)}, {Rational(1, 2), Rational(3)}};
    std::vector<Params> grid;
    for (const auto& [a, b] : ab) {
        grid.push_back(fibonacci_params(a, b));
        grid.push_back(lucas_params(a, b));
        grid.emplace_back(a, b, Rational(1), Rational(1));
        grid.emplace_back(a, b, Rational(1), Rational(4));
    }
    return grid;
}

std::vector<Params> parse_grid(const std::string& text) {
    std::vector<Params> grid;
    std::stringstream tuples(text);
    std::string tuple;
    while (std::getline(tuples, tuple, ';')) {
        if (tuple.empty()) {
            continue;
        }
        std::vector<Rational> values;
        std::stringstream fields(tuple);
        std::string field;
        while (std::getline(fields, field, ',')) {
            values.push_back(Rational::parse(field));
        }
        if (values.size() != 4) {
            throw std::invalid_argument("grid tuple \"" + tuple + "\" needs four values a,b,w0,w1");
        }
        grid.emplace_back(values[0], values[1], values[2], values[3]);
    }
    if (grid.empty()) {
        throw std::invalid_argument("empty grid");
    }
    return grid;
}

unsigned worker_count_from_env() {
    if (const char* env = std::getenv("BPF_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<IdentityReport> verify_point(const Params& params, long n_max,
                                         const std::vector<long>& r_values) {
    std::vector<IdentityReport> out;
    IdentityChecker checker(params);
    SequenceEngine& engine = checker.engine();
    const ClosedForm& cf = checker.closed_form();

    for (long n = 0; n <= n_max; ++n) {
        guarded(out, "w_binet", params, {{"n", n}}, [&] {
            out.push_back(binet_report("w_binet", params, n, to_json(engine.value(n)),
                                       to_json(w_binet(n, params))));
        });
        guarded(out, "W_binet", params, {{"n", n}}, [&] {
            out.push_back(
                binet_report("W_binet", params, n, to_json(W(n, engine)), to_json(hyper_binet<4>(n, cf))));
        });
        guarded(out, "OW_binet", params, {{"n", n}}, [&] {
            out.push_back(binet_report("OW_binet", params, n, to_json(OW(n, engine)),
                                       to_json(hyper_binet<8>(n, cf))));
        });
    }

    for (long n = 0; n <= n_max; ++n) {
        guarded(out, "norm_multiplicative_quat", params, {{"n", n}}, [&] {
            const auto u = W(n, engine);
            const auto v = W(n + 1, engine);
            out.push_back(binet_report("norm_multiplicative_quat", params, n, to_json(hc_norm(u * v)),
                                       to_json(hc_norm(u) * hc_norm(v))));
        });
        guarded(out, "norm_multiplicative_oct", params, {{"n", n}}, [&] {
            const auto u = OW(n, engine);
            const auto v = OW(n + 1, engine);
            out.push_back(binet_report("norm_multiplicative_oct", params, n, to_json(hc_norm(u * v)),
                                       to_json(hc_norm(u) * hc_norm(v))));
        });
    }

    const auto order = static_cast<std::size_t>(n_max);
    guarded(out, "genfunc_quat", params, {}, [&] {
        const auto coeffs = genfunc_quat(params, order);
        for (long n = 0; n <= n_max; ++n) {
            out.push_back(binet_report("genfunc_quat", params, n, to_json(W(n, engine)),
                                       to_json(coeffs[static_cast<std::size_t>(n)])));
        }
    });
    guarded(out, "genfunc_oct", params, {}, [&] {
        const auto coeffs = genfunc_oct(params, order);
        for (long n = 0; n <= n_max; ++n) {
            out.push_back(binet_report("genfunc_oct", params, n, to_json(OW(n, engine)),
                                       to_json(coeffs[static_cast<std::size_t>(n)])));
        }
    });

    if (params.w0().is_zero() && params.w1() == Rational(1)) {
        for (auto kind : {ClassicalKind::FibQuat, ClassicalKind::LucasQuat, ClassicalKind::FibOct,
                          ClassicalKind::LucasOct}) {
            for (long n = 0; n <= n_max; ++n) {
                const std::string name = "classical_binet_" + to_string(kind);
                guarded(out, name, params, {{"n", n}}, [&] {
                    const auto rep = classical_binet_check(n, params.a(), params.b(), kind);
                    nlohmann::json formula = nlohmann::json::array();
                    for (const auto& x : rep.formula) {
                        formula.push_back(to_json(x));
                    }
                    nlohmann::json seq = nlohmann::json::array();
                    for (const auto& x : rep.sequence) {
                        seq.push_back(to_json(x));
                    }
                    IdentityReport r = binet_report(name, params, n, seq, formula);
                    r.equal = rep.equal;
                    out.push_back(std::move(r));
                });
            }
        }
    }

    for (long n = 0; n <= n_max; ++n) {
        for (long r : offsets_for(n, r_values)) {
            if (zeta(r) == 0) {
                guarded(out, "catalan_quat", params, {{"n", n}, {"r", r}},
                        [&] { out.push_back(checker.catalan_quat(n, r)); });
            }
        }
        guarded(out, "cassini_quat", params, {{"n", n}},
                [&] { out.push_back(checker.cassini_quat(n)); });
        guarded(out, "mixed_relation_quat", params, {{"n", n}},
                [&] { out.push_back(checker.mixed_relation_quat(n)); });
        guarded(out, "mixed_relation_oct", params, {{"n", n}},
                [&] { out.push_back(checker.mixed_relation_oct(n)); });
        guarded(out, "norm_formula", params, {{"n", n}},
                [&] { out.push_back(checker.norm_formula(n)); });
        if (n >= 1) {
            guarded(out, "matrix_rep", params, {{"n", n}}, [&] { out.push_back(checker.matrix_rep(n)); });
            guarded(out, "cassini_even", params, {{"n", n}},
                    [&] { out.push_back(checker.cassini_even(n)); });
            guarded(out, "sums_quat", params, {{"n", n}}, [&] {
                for (auto& rep : checker.sums_quat(n)) {
                    out.push_back(std::move(rep));
                }
            });
            guarded(out, "sums_oct", params, {{"n", n}}, [&] {
                for (auto& rep : checker.sums_oct(n)) {
                    out.push_back(std::move(rep));
                }
            });
        }
    }

    // Exploratory: octonion Catalan for both parities of r.
    for (long n = 0; n <= n_max; ++n) {
        for (long r : offsets_for(n, r_values)) {
            try {
                out.push_back(checker.catalan_oct(n, r));
            } catch (const std::exception& e) {
                IdentityReport failed{"catalan_oct", params, {{"n", n}, {"r", r}}, nullptr, nullptr,
                                      false, zeta(r) == 1, false, std::nullopt};
                failed.add_note(std::string("error: ") + e.what());
                out.push_back(std::move(failed));
            }
        }
    }
    return out;
}

int cmd_table(const RunConfig& config, std::ostream& out) {
    Sink sink(config, out);
    std::ostream& os = *sink;
    if (config.output == OutputFormat::Csv) {
        os << "a,b,w0,w1,n,w";
        for (int l = 0; l < 4; ++l) {
            os << ",W" << l;
        }
        for (int l = 0; l < 8; ++l) {
            os << ",OW" << l;
        }
        os << "\n";
    }
    for (const Params& params : config.grid) {
        SequenceEngine engine(params);
        const long start = config.negative ? -config.n_max : 0;
        for (long n = start; n <= config.n_max; ++n) {
            const auto wq = W(n, engine);
            const auto wo = OW(n, engine);
            if (config.output == OutputFormat::Json) {
                nlohmann::json row = {{"params", to_json(params)}, {"n", n},
                                      {"w", to_json(engine.value(n))},
                                      {"W", to_json(wq)},
                                      {"OW", to_json(wo)}};
                os << dump_canonical(row) << "\n";
            } else {
                os << params.a() << "," << params.b() << "," << params.w0() << "," << params.w1() << ","
                   << n << "," << engine.value(n);
                for (std::size_t l = 0; l < 4; ++l) {
                    os << "," << wq[l];
                }
                for (std::size_t l = 0; l < 8; ++l) {
                    os << "," << wo[l];
                }
                os << "\n";
            }
        }
    }
    return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Sink sink(config, out);
    std::ostream& os = *sink;
    const std::size_t points = config.grid.size();
    std::vector<std::vector<IdentityReport>> results(points);
    {
        std::atomic<std::size_t> next{0};
        const unsigned workers = std::max(1U, std::min<unsigned>(config.workers, static_cast<unsigned>(points)));
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = next++; i < points; i = next++) {
                        results[i] = verify_point(config.grid[i], config.n_max, config.r_values);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
        for (const auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    nlohmann::json grid = nlohmann::json::array();
    for (const auto& p : config.grid) {
        grid.push_back(to_json(p));
    }
    nlohmann::json header = {{"type", "header"}, {"command", "verify"}, {"grid", grid},
                             {"default_grid", config.default_grid}, {"n_max", config.n_max}};
    if (config.output == OutputFormat::Json) {
        os << dump_canonical(header) << "\n";
    } else {
        err << dump_canonical(header) << "\n";
        os << csv_header() << "\n";
    }

    long checks = 0;
    long gating_failures = 0;
    long exploratory_mismatches = 0;
    for (const auto& reports : results) {
        for (const auto& report : reports) {
            ++checks;
            if (!report.equal) {
                ++(report.gating ? gating_failures : exploratory_mismatches);
            }
            if (config.output == OutputFormat::Json) {
                nlohmann::json j = to_json(report);
                j["type"] = "check";
                os << dump_canonical(j) << "\n";
            } else {
                os << csv_row(report) << "\n";
            }
        }
    }

    // Parity map from the octonion Catalan reports already computed.
    for (std::size_t g = 0; g < points; ++g) {
        ParityMapRow even{g, config.grid[g], false, 0, 0};
        ParityMapRow odd{g, config.grid[g], true, 0, 0};
        for (const auto& report : results[g]) {
            if (report.identity != "catalan_oct") {
                continue;
            }
            ParityMapRow& row = zeta(report.indices.at("r")) == 1 ? odd : even;
            ++row.checks;
            row.equal += report.equal ? 1 : 0;
        }
        for (const auto* row : {&even, &odd}) {
            if (config.output == OutputFormat::Json) {
                os << dump_canonical(parity_row_json(*row)) << "\n";
            } else {
                err << dump_canonical(parity_row_json(*row)) << "\n";
            }
        }
    }

    const int code = gating_failures == 0 ? kOk : kMismatch;
    nlohmann::json summary = {{"type", "summary"},
                              {"checks", checks},
                              {"gating_failures", gating_failures},
                              {"exploratory_mismatches", exploratory_mismatches},
                              {"exit", code}};
    if (config.output == OutputFormat::Json) {
        os << dump_canonical(summary) << "\n";
    } else {
        err << dump_canonical(summary) << "\n";
    }
    return code;
}

int cmd_genfunc(const RunConfig& config, std::ostream& out) {
    Sink sink(config, out);
    std::ostream& os = *sink;
    bool all_match = true;
    if (config.output == OutputFormat::Csv) {
        os << "a,b,w0,w1,degree,component,coefficient,expected,match\n";
    }
    for (const Params& params : config.grid) {
        SequenceEngine engine(params);
        const auto emit = [&](std::size_t k, const nlohmann::json& coeff, const nlohmann::json& expected) {
            const bool match = coeff == expected;
            all_match = all_match && match;
            if (config.output == OutputFormat::Json) {
                nlohmann::json row = {{"params", to_json(params)}, {"degree", k}, {"coefficient", coeff},
                                      {"expected", expected}, {"match", match}};
                os << dump_canonical(row) << "\n";
            } else {
                for (std::size_t l = 0; l < coeff.size(); ++l) {
                    os << params.a() << "," << params.b() << "," << params.w0() << "," << params.w1() << ","
                       << k << "," << l << "," << coeff[l].get<std::string>() << ","
                       << expected[l].get<std::string>() << "," << (match ? "true" : "false") << "\n";
                }
            }
        };
        if (config.octonion) {
            const auto coeffs = genfunc_oct(params, config.order);
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                emit(k, to_json(coeffs[k]), to_json(OW(static_cast<long>(k), engine)));
            }
        } else {
            const auto coeffs = genfunc_quat(params, config.order);
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                emit(k, to_json(coeffs[k]), to_json(W(static_cast<long>(k), engine)));
            }
        }
    }
    return all_match ? kOk : kMismatch;
}

int cmd_norm(const RunConfig& config, std::ostream& out) {
    Sink sink(config, out);
    std::ostream& os = *sink;
    bool all_equal = true;
    if (config.output == OutputFormat::Csv) {
        os << csv_header() << "\n";
    }
    for (const Params& params : config.grid) {
        IdentityChecker checker(params);
        for (long n = 0; n <= config.n_max; ++n) {
            const IdentityReport report = checker.norm_formula(n);
            all_equal = all_equal && report.equal;
            if (config.output == OutputFormat::Json) {
                os << dump_canonical(to_json(report)) << "\n";
            } else {
                os << csv_row(report) << "\n";
            }
        }
    }
    return all_equal ? kOk : kMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized bi-periodic Fibonacci quaternions and octonions: exact tables, "
                 "generating functions and identity verification"};
    app.require_subcommand(1);
    RawOptions raw;
    std::string chosen;
    for (const char* name : {"table", "verify", "genfunc", "norm"}) {
        CLI::App* sub = nullptr;
        if (std::string(name) == "table") {
            sub = app.add_subcommand(name, "print w_n, W_n and OW_n");
        } else if (std::string(name) == "verify") {
            sub = app.add_subcommand(name, "run the identity suite over a parameter grid");
        } else if (std::string(name) == "genfunc") {
            sub = app.add_subcommand(name, "expand the generating function and compare with W_n / OW_n");
        } else {
            sub = app.add_subcommand(name, "compare Nr(W_n) with its closed form");
        }
        add_common_options(*sub, raw);
        sub->callback([&chosen, name] { chosen = name; });
    }

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    try {
        rest = expand_config(std::move(rest));
        std::vector<std::string> reversed(rest.rbegin(), rest.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    RunConfig config;
    try {
        config = validate(raw, chosen == "verify");
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (chosen == "table") {
            return cmd_table(config, out);
        }
        if (chosen == "verify") {
            return cmd_verify(config, out, err);
        }
        if (chosen == "genfunc") {
            return cmd_genfunc(config, out);
        }
        return cmd_norm(config, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kMismatch;
    }
}

}  // namespace bpf::cli
