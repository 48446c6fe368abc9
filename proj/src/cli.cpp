#include "hommel/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>

#include "hommel/adjust.hpp"
#include "hommel/bench.hpp"
#include "hommel/core.hpp"
#include "hommel/errors.hpp"
#include "hommel/jumps.hpp"

namespace hommel {

namespace {

struct InputOptions {
    std::string path;        // empty or "-" reads stdin
    std::size_t column = 0;  // 1-based CSV column; 0 takes the whole line
    bool skip_header = false;
};

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

double parse_pvalue(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const char* last = field.data() + field.size();
    const auto result = std::from_chars(field.data(), last, value);
    if (result.ec != std::errc{} || result.ptr != last)
        throw Error("line " + std::to_string(line_no) + ": cannot parse '" +
                    std::string(field) + "' as a p-value");
    if (!(value >= 0.0 && value <= 1.0))
        throw Error("line " + std::to_string(line_no) + ": p-value " +
                    std::string(field) + " outside [0,1]");
    return value;
}

std::vector<double> read_pvalues(std::istream& in, const InputOptions& options) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (options.skip_header && line_no == 1) continue;
        const std::string_view text = trim(line);
        if (text.empty()) continue;

        std::string_view field = text;
        if (options.column > 0) {
            std::string_view rest = text;
            std::size_t index = 1;
            while (index < options.column) {
                const std::size_t comma = rest.find(',');
                if (comma == std::string_view::npos)
                    throw Error("line " + std::to_string(line_no) + ": no column " +
                                std::to_string(options.column));
                rest.remove_prefix(comma + 1);
                ++index;
            }
            const std::size_t comma = rest.find(',');
            field = trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
        }
        values.push_back(parse_pvalue(field, line_no));
    }
    if (values.empty()) throw EmptyInput();
    return values;
}

std::vector<double> load_pvalues(const InputOptions& options, std::istream& fallback) {
    if (options.path.empty() || options.path == "-")
        return read_pvalues(fallback, options);
    std::ifstream file(options.path);
    if (!file) throw Error("cannot open input file '" + options.path + "'");
    return read_pvalues(file, options);
}

void cmd_adjust(const InputOptions& input, const std::string& method,
                const std::string& weights_name, std::istream& in, std::ostream& out) {
    const PValueStudy study = make_study(load_pvalues(input, in));
    AdjustmentResult result;
    if (method == "hochberg") {
        result = adjust_hochberg(study);
    } else {
        const StepWeights weights =
            make_step_weights(parse_weight_kind(weights_name), study.size());
        const CriticalSchedule schedule = find_jumps(study, weights);
        result = adjust_hommel(study, schedule, weights);
    }
    out << "index,p,adjusted\n";
    for (std::size_t i = 0; i < study.size(); ++i)
        out << i + 1 << ',' << format_double(study.raw[i]) << ','
            << format_double(result.adjusted[i]) << '\n';
}

void cmd_reject(const InputOptions& input, const std::string& method,
                const std::string& weights_name, double alpha, std::istream& in,
                std::ostream& out) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidAlpha(alpha);
    const PValueStudy study = make_study(load_pvalues(input, in));
    RejectionSet set;
    if (method == "hochberg") {
        set = reject_hochberg_at(study, alpha);
    } else {
        const StepWeights weights =
            make_step_weights(parse_weight_kind(weights_name), study.size());
        const CriticalSchedule schedule = find_jumps(study, weights);
        out << "# h(alpha)=" << h_at(schedule, alpha) << '\n';
        set = reject_hommel_at(study, schedule, weights, alpha);
    }
    for (std::size_t index : set.indices) out << index << '\n';
}

void cmd_jumps(const InputOptions& input, const std::string& weights_name,
               std::istream& in, std::ostream& out) {
    const PValueStudy study = make_study(load_pvalues(input, in));
    const StepWeights weights =
        make_step_weights(parse_weight_kind(weights_name), study.size());
    const CriticalSchedule schedule = find_jumps(study, weights);
    out << "i,alpha_star,alpha\n";
    for (std::size_t i = 1; i <= study.size(); ++i)
        out << i << ',' << format_double(schedule.alpha_star[i - 1]) << ','
            << format_double(schedule.alpha[i - 1]) << '\n';
}

void cmd_bench(const std::vector<std::size_t>& sizes,
               const std::vector<std::string>& method_names, std::uint64_t seed,
               std::size_t repetitions, std::size_t quadratic_cap, std::ostream& out) {
    std::vector<BenchMethod> methods;
    methods.reserve(method_names.size());
    for (const std::string& name : method_names)
        methods.push_back(parse_bench_method(name));
    const std::vector<BenchRecord> records =
        run_benchmark(sizes, methods, seed, repetitions, quadratic_cap);
    write_bench_csv(records, out);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"familywise error rate control by closed testing with Simes local tests"};
    app.name("hommel");
    app.require_subcommand(1);

    InputOptions input;
    std::string method = "hommel";
    std::string weights_name = "simes";
    double alpha = 0.05;

    const auto add_input_options = [&input](CLI::App* cmd) {
        cmd->add_option("input", input.path,
                        "file of p-values, one per line ('-' or omitted reads stdin)");
        cmd->add_option("--column", input.column,
                        "1-based CSV column holding the p-values");
        cmd->add_flag("--skip-header", input.skip_header, "skip the first input line");
    };

    CLI::App* adjust_cmd =
        app.add_subcommand("adjust", "write adjusted p-values as CSV (index,p,adjusted)");
    add_input_options(adjust_cmd);
    adjust_cmd->add_option("--method", method, "hommel or hochberg")
        ->check(CLI::IsMember({"hommel", "hochberg"}));
    adjust_cmd->add_option("--weights", weights_name, "simes or robust (hommel only)")
        ->check(CLI::IsMember({"simes", "robust"}));

    CLI::App* reject_cmd =
        app.add_subcommand("reject", "list rejected hypothesis indices at a level");
    add_input_options(reject_cmd);
    reject_cmd->add_option("--alpha", alpha, "rejection level in [0,1]")->required();
    reject_cmd->add_option("--method", method, "hommel or hochberg")
        ->check(CLI::IsMember({"hommel", "hochberg"}));
    reject_cmd->add_option("--weights", weights_name, "simes or robust (hommel only)")
        ->check(CLI::IsMember({"simes", "robust"}));

    CLI::App* jumps_cmd =
        app.add_subcommand("jumps", "write the critical schedule as CSV (i,alpha_star,alpha)");
    add_input_options(jumps_cmd);
    jumps_cmd->add_option("--weights", weights_name, "simes or robust")
        ->check(CLI::IsMember({"simes", "robust"}));

    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time the adjustment methods, CSV to stdout");
    std::vector<std::size_t> sizes = {1000, 10000, 100000, 1000000, 10000000};
    std::vector<std::string> method_names = {"hommel-fast", "hochberg"};
    std::uint64_t seed = 42;
    std::size_t repetitions = 3;
    std::size_t quadratic_cap = kQuadraticGuard;
    bench_cmd->add_option("--sizes", sizes, "problem sizes")->delimiter(',');
    bench_cmd
        ->add_option("--methods", method_names,
                     "hommel-fast, hommel-quadratic and/or hochberg")
        ->delimiter(',');
    bench_cmd->add_option("--seed", seed, "generator seed");
    bench_cmd->add_option("--reps", repetitions, "repetitions to average over");
    bench_cmd->add_option("--quadratic-cap", quadratic_cap,
                          "largest m allowed for hommel-quadratic");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*adjust_cmd) {
            cmd_adjust(input, method, weights_name, in, out);
        } else if (*reject_cmd) {
            cmd_reject(input, method, weights_name, alpha, in, out);
        } else if (*jumps_cmd) {
            cmd_jumps(input, weights_name, in, out);
        } else if (*bench_cmd) {
            cmd_bench(sizes, method_names, seed, repetitions, quadratic_cap, out);
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace hommel
