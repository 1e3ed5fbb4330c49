// crs-plucker: equivariant classes of coincident root strata and the
// generalized Plücker formulas they encode.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input or flags,
// 3 internal assertion (a bug), 4 evaluation below the validity floor.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "pluck/combinat.hpp"
#include "pluck/crs.hpp"
#include "pluck/errors.hpp"
#include "pluck/io.hpp"
#include "pluck/plucker.hpp"
#include "pluck/verify.hpp"

namespace {

using namespace pluck;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitBelowFloor = 4;

struct CacheHandle {
    std::string path;
    ClassCache cache;
    std::size_t loaded_size = 0;

    void open() {
        if (path.empty()) return;
        const auto report = cache.load(path);
        if (report.rejected)
            std::cerr << "cache: dropped " << report.rejected << " invalid entr" << (report.rejected == 1 ? "y" : "ies")
                      << " from " << path << "\n";
        loaded_size = cache.size();
    }

    void close() {
        if (!path.empty() && cache.size() != loaded_size) cache.save(path);
    }
};

PivotPolicy parse_pivot(const std::string& text) {
    if (text == "min") return PivotPolicy::min_part();
    if (text == "max") return PivotPolicy::max_part();
    // an explicit removal order, kept in the order given
    std::vector<int> order;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int value = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || end != item.data() + item.size() || item.empty())
            throw InputError("--pivot expects min, max or a comma-separated removal order, got '" + text + "'");
        order.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return PivotPolicy::explicit_sequence(std::move(order));
}

void print_value_line(OutputFormat format, const InputPartition& lambda, int codim_index, long d0,
                      const BigInt& value) {
    if (format == OutputFormat::Latex) {
        std::cout << "\\mathrm{Pl}_{" << lambda.key() << ";" << codim_index << "}(" << d0 << ") = " << value.get_str()
                  << "\n";
    } else {
        std::cout << plucker_label(lambda, codim_index) << "(" << d0 << ") = " << value.get_str() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant classes of coincident root strata and generalized Plücker formulas"};
    app.require_subcommand(1);

    std::string format_name = "plain";
    std::string cache_path;
    if (const char* env = std::getenv("CRS_PLUCKER_CACHE")) cache_path = env;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"plain", "json", "latex"}));
        cmd->add_option("--cache", cache_path, "Persistent class cache (JSON); defaults to $CRS_PLUCKER_CACHE");
    };

    std::string partition_text;
    std::string pivot_text = "min";
    auto* class_cmd = app.add_subcommand("class", "Print the class [Y_lambda(d)] in the Schur basis");
    class_cmd->add_option("partition", partition_text, "Comma-separated parts, each >= 2")->required();
    class_cmd->add_option("--pivot", pivot_text, "min, max, or an explicit removal order such as 3,2,2");
    add_common(class_cmd);

    std::optional<int> codim_index;
    bool all_rows = false;
    std::optional<long> eval_at;
    auto* plucker_cmd = app.add_subcommand("plucker", "Print Plücker formulas, or evaluate them with --eval");
    plucker_cmd->add_option("partition", partition_text, "Comma-separated parts, each >= 2")->required();
    auto* codim_opt = plucker_cmd->add_option("--codim", codim_index, "Codimension index i = c - 2j");
    auto* all_opt = plucker_cmd->add_flag("--all", all_rows, "Every formula of the partition (default)");
    codim_opt->excludes(all_opt);
    plucker_cmd->add_option("--eval", eval_at, "Evaluate at this degree d (d >= |lambda|)");
    add_common(plucker_cmd);

    SweepOptions sweep;
    std::string pivots_mode = "min";
    auto* verify_cmd = app.add_subcommand("verify", "Check every invariant for all partitions up to a weight");
    verify_cmd->add_option("--max-weight", sweep.max_weight, "Largest |lambda| to sweep")->required()->check(
        CLI::Range(2, 64));
    verify_cmd->add_option("--pivots", pivots_mode, "min: compare min against max pivots; all: every removal order")
        ->check(CLI::IsMember({"all", "min"}));
    verify_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = hardware concurrency)");
    add_common(verify_cmd);

    std::string cache_action;
    int warm_weight = 10;
    auto* cache_cmd = app.add_subcommand("cache", "Inspect, warm or clear the persistent cache");
    cache_cmd->add_option("action", cache_action, "info, warm or clear")
        ->required()
        ->check(CLI::IsMember({"info", "warm", "clear"}));
    cache_cmd->add_option("--max-weight", warm_weight, "Largest |lambda| to compute for warm");
    cache_cmd->add_option("--cache", cache_path, "Persistent class cache (JSON); defaults to $CRS_PLUCKER_CACHE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    CacheHandle handle;
    handle.path = cache_path;

    try {
        const OutputFormat format = parse_output_format(format_name);
        handle.open();
        int status = 0;

        if (*class_cmd) {
            const InputPartition lambda = InputPartition::parse(partition_text);
            const PivotPolicy policy = parse_pivot(pivot_text);
            const PolyClass cls = crs_class(lambda, policy, &handle.cache);
            switch (format) {
                case OutputFormat::Plain: std::cout << class_to_plain(lambda, cls) << "\n"; break;
                case OutputFormat::Json: std::cout << class_to_json(lambda, cls).dump() << "\n"; break;
                case OutputFormat::Latex: std::cout << class_to_latex(lambda, cls) << "\n"; break;
            }
        } else if (*plucker_cmd) {
            const InputPartition lambda = InputPartition::parse(partition_text);
            if (lambda.empty()) throw InvalidPartition("Plücker formulas need a nonempty partition");
            std::optional<int> only_j;
            if (codim_index) only_j = j_from_codim_index(lambda, *codim_index);
            if (eval_at && *eval_at < lambda.weight())
                throw BelowValidityFloor("d = " + std::to_string(*eval_at) + " is below the validity floor |lambda| = " +
                                         std::to_string(lambda.weight()));

            PluckerTable table = plucker_formulas(lambda, &handle.cache);
            if (only_j) {
                PluckerRow row = table.rows.at(static_cast<std::size_t>(*only_j));
                table.rows = {row};
            }

            if (eval_at) {
                if (format == OutputFormat::Json) {
                    nlohmann::json values = nlohmann::json::array();
                    for (const auto& row : table.rows)
                        values.push_back({{"codim_index", row.formula.codim_index},
                                          {"value", plucker_value(row.formula, *eval_at).get_str()}});
                    std::cout << nlohmann::json{{"partition", partition_to_json(lambda)},
                                                {"d", *eval_at},
                                                {"values", std::move(values)}}
                                     .dump()
                              << "\n";
                } else if (only_j && format == OutputFormat::Plain) {
                    std::cout << plucker_value(table.rows.front().formula, *eval_at).get_str() << "\n";
                } else {
                    for (const auto& row : table.rows)
                        print_value_line(format, lambda, row.formula.codim_index, *eval_at,
                                         plucker_value(row.formula, *eval_at));
                }
            } else {
                switch (format) {
                    case OutputFormat::Plain: std::cout << table_to_plain(table); break;
                    case OutputFormat::Json: std::cout << table_to_json(table).dump() << "\n"; break;
                    case OutputFormat::Latex: std::cout << table_to_latex(table); break;
                }
            }
        } else if (*verify_cmd) {
            sweep.all_pivots = pivots_mode == "all";
            const SweepReport report = run_sweep(sweep, handle.cache);
            switch (format) {
                case OutputFormat::Plain: std::cout << report_to_plain(report); break;
                case OutputFormat::Json: std::cout << report_to_json(report).dump() << "\n"; break;
                case OutputFormat::Latex: std::cout << report_to_latex(report); break;
            }
            std::cerr << "recursion steps: " << report.recursion_steps
                      << ", divisibility assertions: " << report.divisibility_checks << "\n";
            if (!report.ok()) {
                const auto& w = *report.witness;
                std::cerr << "verification failed: " << w.check << " on " << w.partition << "\n";
                status = kExitVerifyFailed;
            }
        } else if (*cache_cmd) {
            if (handle.path.empty()) throw InputError("cache: no cache path (use --cache or CRS_PLUCKER_CACHE)");
            if (cache_action == "info") {
                std::cout << "cache " << handle.path << ": " << handle.cache.size() << " entries\n";
                for (const auto& [key, cls] : handle.cache.snapshot()) std::cout << "  " << key << "\n";
            } else if (cache_action == "warm") {
                for (const auto& lambda : enumerate_partitions_no_ones(warm_weight))
                    crs_class(lambda, PivotPolicy::min_part(), &handle.cache);
                std::cout << "cache " << handle.path << ": " << handle.cache.size() << " entries\n";
            } else {
                handle.cache.clear();
                handle.cache.save(handle.path);
                handle.loaded_size = 0;
                std::cout << "cache " << handle.path << ": cleared\n";
            }
        }

        handle.close();
        return status;
    } catch (const BelowValidityFloor& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBelowFloor;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const InternalAssertion& e) {
        std::cerr << "internal assertion failed: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
