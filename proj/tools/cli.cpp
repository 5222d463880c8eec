#include "cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "schreier/closed_forms.hpp"
#include "schreier/enumeration.hpp"
#include "schreier/errors.hpp"

namespace schreier::cli {

namespace {

struct TableArgs {
    int k_max = 7;
    int n_max = 16;
    std::string source = "closed";
    std::string format = "text";
};

struct EnumerateArgs {
    std::string family;
    std::optional<int> k, n, p, q;
    std::string strategy = "naive";
    std::string format = "text";
};

struct VerifyArgs {
    std::string suite;
    std::optional<int> n_max, k_max;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::size_t> corrupt_fib;
};

struct SequenceArgs {
    std::string name;
    int n_max = 20;
    std::string format = "text";
};

Format format_of(const std::string& name) { return *parse_format(name); }

int require(const std::optional<int>& value, const char* flag) {
    if (!value) throw ParameterError(std::string("missing required option ") + flag);
    return *value;
}

int cmd_table(const TableArgs& a, const EnumOptions& enum_options, std::ostream& out) {
    if (a.k_max < 1 || a.n_max < 1) throw ParameterError("--k-max and --n-max must be >= 1");
    std::vector<std::vector<Count>> rows(static_cast<std::size_t>(a.k_max));
    if (a.source == "recurrence") {
        const auto table = a_recurrence_table(a.k_max, a.n_max);
        for (int k = 1; k <= a.k_max; ++k) {
            for (int n = 1; n <= a.n_max; ++n) rows[static_cast<std::size_t>(k - 1)].push_back(table.at(k, n));
        }
    } else {
        const bool oracle = a.source == "oracle";
        for (int k = 1; k <= a.k_max; ++k) {
            for (int n = 1; n <= a.n_max; ++n) {
                rows[static_cast<std::size_t>(k - 1)].push_back(
                    oracle ? count_A(k, n, Strategy::naive, enum_options) : a_closed(k, n));
            }
        }
    }
    out << render_table(rows, a.source, format_of(a.format));
    return kOk;
}

int cmd_enumerate(const EnumerateArgs& a, const EnumOptions& enum_options, std::ostream& out) {
    std::vector<FiniteSet> sets;
    if (a.family == "A") {
        const auto strategy = a.strategy == "by_min" ? Strategy::by_min : Strategy::naive;
        sets = enumerate_A(require(a.k, "--k"), require(a.n, "--n"), strategy, enum_options);
    } else if (a.family == "K") {
        sets = enumerate_K(require(a.n, "--n"), enum_options);
    } else {
        sets = enumerate_mpq(require(a.p, "--p"), require(a.q, "--q"), require(a.n, "--n"), enum_options);
    }
    out << render_sets(sets, format_of(a.format));
    return kOk;
}

int cmd_sequence(const SequenceArgs& a, std::ostream& out) {
    std::vector<Count> values;
    int offset = 0;
    if (a.name == "fib") {
        if (a.n_max < 0) throw ParameterError("--n-max must be >= 0");
        for (int n = 0; n <= a.n_max; ++n) values.push_back(fib(static_cast<std::size_t>(n)));
    } else if (a.name == "a-diag") {
        offset = 1;
        for (int n = 1; n <= a.n_max; ++n) values.push_back(a_diag(n));
    } else {
        offset = 2;
        for (int n = 2; n <= a.n_max; ++n) values.push_back(k_count(n));
    }
    out << render_sequence(a.name, offset, values, format_of(a.format));
    return kOk;
}

int cmd_verify(const VerifyArgs& a, const EnumOptions& enum_options, std::ostream& out, std::ostream& err) {
    const auto suite = parse_suite(a.suite);
    if (!suite) {
        err << "unknown suite '" << a.suite << "'; expected one of:";
        for (auto name : suite_names()) err << ' ' << name;
        err << '\n';
        return kUsage;
    }
    struct CacheRestore {
        bool active;
        ~CacheRestore() {
            if (active) testing::reset_fib_cache();
        }
    } restore{a.corrupt_fib.has_value()};
    if (a.corrupt_fib) {
        const auto n = *a.corrupt_fib;
        testing::corrupt_fib_cache(n, fib(n) + 1);
    }
    VerifyOptions options;
    options.n_max = a.n_max;
    options.k_max = a.k_max;
    options.seed = a.seed;
    options.enumeration = enum_options;
    const auto reports = run_suite(*suite, options);
    out << render_reports(reports);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed; });
    return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count, enumerate and verify weighted Schreier set families", "schreier"};
    app.require_subcommand(1);

    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads for exhaustive enumeration")
        ->check(CLI::Range(1u, 256u));

    const auto formats = CLI::IsMember({"csv", "json", "text"});

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Print a_{k,n} for 1<=k<=K, 1<=n<=N");
    table_cmd->add_option("--k-max", table.k_max, "Largest k (rows)");
    table_cmd->add_option("--n-max", table.n_max, "Largest n (columns)");
    table_cmd->add_option("--source", table.source, "closed, recurrence or oracle")
        ->check(CLI::IsMember({"closed", "recurrence", "oracle"}));
    table_cmd->add_option("--format", table.format, "csv, json or text")->check(formats);

    EnumerateArgs enumerate;
    auto* enum_cmd = app.add_subcommand("enumerate", "List the members of A_{k,n}, K_n or the (p,q) family");
    enum_cmd->add_option("--family", enumerate.family, "A, K or mpq")
        ->required()
        ->check(CLI::IsMember({"A", "K", "mpq"}));
    enum_cmd->add_option("--k", enumerate.k, "k (family A)");
    enum_cmd->add_option("--n", enumerate.n, "n");
    enum_cmd->add_option("--p", enumerate.p, "p (family mpq)");
    enum_cmd->add_option("--q", enumerate.q, "q (family mpq)");
    enum_cmd->add_option("--strategy", enumerate.strategy, "naive or by_min (family A)")
        ->check(CLI::IsMember({"naive", "by_min"}));
    enum_cmd->add_option("--format", enumerate.format, "csv, json or text")->check(formats);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
    verify_cmd->add_option("--suite", verify.suite, "Suite name, or 'all'")->required();
    verify_cmd->add_option("--n-max", verify.n_max, "Override the suite's upper bound on n");
    verify_cmd->add_option("--k-max", verify.k_max, "Override the suite's upper bound on k");
    verify_cmd->add_option("--seed", verify.seed, "Seed for the randomized checks");
    verify_cmd->add_option("--corrupt-fib", verify.corrupt_fib, "Testing only: perturb one cached Fibonacci value")
        ->group("");

    SequenceArgs sequence;
    auto* seq_cmd = app.add_subcommand("sequence", "Print a sequence, one term per line");
    seq_cmd->add_option("--name", sequence.name, "a-diag, k-count or fib")
        ->required()
        ->check(CLI::IsMember({"a-diag", "k-count", "fib"}));
    seq_cmd->add_option("--n-max", sequence.n_max, "Last index");
    seq_cmd->add_option("--format", sequence.format, "csv, json or text")->check(formats);

    std::vector<const char*> argv{"schreier"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        EnumOptions enum_options = EnumOptions::from_environment();
        enum_options.threads = threads;
        if (*table_cmd) return cmd_table(table, enum_options, out);
        if (*enum_cmd) return cmd_enumerate(enumerate, enum_options, out);
        if (*verify_cmd) return cmd_verify(verify, enum_options, out, err);
        if (*seq_cmd) return cmd_sequence(sequence, out);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kSizeLimit;
    }
    return kUsage;
}

}  // namespace schreier::cli
