// octcode: analyze linear codes over Z8 and check published statements about them.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "octcode/octcode.hpp"
#include "octcode/report.hpp"

namespace {

using namespace octcode;

enum Exit : int { ok = 0, parse_failure = 2, parameter_failure = 3, budget_failure = 4, consistency_failure = 5 };

struct Source {
    LinearCode code;
    std::string descriptor;
    std::optional<FamilySpec> spec;
};

// A path that exists is read as a matrix file; anything else must be a family spec.
Source load(const std::string& text) {
    if (std::filesystem::is_regular_file(text)) {
        std::ifstream in(text);
        std::stringstream buf;
        buf << in.rdbuf();
        return {LinearCode(GeneratorMatrix::parse(buf.str())), "file:" + std::filesystem::path(text).filename().string(), {}};
    }
    auto spec = parse_family(text);
    return {build(spec), format_family(spec), spec};
}

std::set<Metric> metrics_of(const std::vector<std::string>& names) {
    std::set<Metric> out;
    for (const auto& n : names) {
        if (n == "all") {
            out.insert(kAllMetrics.begin(), kAllMetrics.end());
        } else {
            out.insert(parse_metric(n));
        }
    }
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path);
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int fail(const char* kind, const std::string& message, int code) {
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear codes over Z8: structure, covering radius, and claim verification"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kToolVersion));

    Budget budget;
    std::string format = "json", output;
    app.add_option("--threads", budget.threads, "worker threads (0: all cores)")->envname("OCTCODE_THREADS");
    app.add_option("--scan-budget", budget.scan_evaluations, "maximum distance evaluations per oracle")
        ->envname("OCTCODE_SCAN_BUDGET");
    app.add_option("--coset-budget", budget.coset_table, "maximum coset table entries")->envname("OCTCODE_COSET_BUDGET");
    app.add_option("--gray-max-n", budget.gray_max_n, "longest code for the Gray image scan")->envname("OCTCODE_GRAY_MAX_N");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("-o,--output", output, "write the report to a file instead of stdout");

    std::string source;
    bool torsion = false, verify = false, distribution = false;
    std::vector<std::string> covrad;
    auto* analyze = app.add_subcommand("analyze", "standard form, type, oracles and claims for one code");
    analyze->add_option("source", source, "matrix file or family spec, e.g. simplex-alpha:k=2")->required();
    analyze->add_flag("--torsion", torsion, "include the reduction and torsion structure report");
    analyze->add_option("--covrad", covrad, "compute exact covering radius: metric name or 'all'")->expected(1, 4);
    analyze->add_flag("--verify", verify, "check every applicable published claim");
    analyze->add_flag("--distribution", distribution, "weight distributions in all four metrics");

    std::string scope = "all";
    auto* paper = app.add_subcommand("verify-paper", "run the fixed claim suite");
    paper->add_option("scope", scope, "repetition, brep, simplex, macdonald, reed-muller, octacode, bounds, torsion or all")
        ->check(CLI::IsMember(paper_scopes()));

    auto* dual_cmd = app.add_subcommand("dual", "generator matrix of the dual code");
    dual_cmd->add_option("source", source)->required();

    auto* gray_cmd = app.add_subcommand("gray", "Gray image generators and binary covering radius");
    gray_cmd->add_option("source", source)->required();

    std::vector<std::string> covrad_metrics = {"all"};
    auto* covrad_cmd = app.add_subcommand("covrad", "exact covering radius");
    covrad_cmd->add_option("source", source)->required();
    covrad_cmd->add_option("--metric", covrad_metrics, "metric name or 'all'")->expected(1, 4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("parse", e.what(), parse_failure);
    }

    try {
        const bool table = format == "table";
        if (*analyze) {
            auto src = load(source);
            AnalysisOptions opt{budget, metrics_of(covrad), verify, torsion, distribution};
            Analyzer an(opt);
            const auto a = an.run(src.code, src.descriptor, src.spec);
            for (auto m : opt.covrad)
                if (!a.ledger[m].exact)
                    throw BudgetError("covering radius r_" + std::string(metric_name(m)) + " refused by budget", 0, 0);
            emit(table ? to_table(a) : dump(to_json(a)), output);
        } else if (*paper) {
            const auto r = verify_paper(scope, budget);
            emit(table ? to_table(r) : dump(to_json(r)), output);
        } else if (*dual_cmd) {
            const auto src = load(source);
            const auto d = dual(src.code);
            if (table) {
                emit(d.generators().to_text(), output);
            } else {
                Json j = Json{{"tool", kToolName}, {"version", kToolVersion}, {"command", "dual"}};
                j["code"] = src.descriptor;
                j["length"] = d.length();
                const auto t = d.type();
                j["type"] = {{"k0", t.k0}, {"k1", t.k1}, {"k2", t.k2}};
                Json rows = Json::array();
                for (const auto& r : d.generators().rows()) rows.push_back(r.to_string());
                j["generators"] = rows;
                emit(dump(j), output);
            }
        } else if (*gray_cmd) {
            const auto src = load(source);
            Json rows = Json::array();
            for (const auto& r : src.code.generators().rows()) rows.push_back(gray_map(r).to_string());
            const unsigned radius = gray_image_covering_radius(src.code, budget);
            if (table) {
                std::string out;
                for (const auto& r : rows) out += r.get<std::string>() + "\n";
                out += "binary covering radius " + std::to_string(radius) + "\n";
                emit(out, output);
            } else {
                Json j = Json{{"tool", kToolName}, {"version", kToolVersion}, {"command", "gray"}};
                j["code"] = src.descriptor;
                j["image_length"] = 4 * src.code.length();
                j["image_generators"] = rows;
                j["binary_covering_radius"] = radius;
                emit(dump(j), output);
            }
        } else if (*covrad_cmd) {
            const auto src = load(source);
            Json j = Json{{"tool", kToolName}, {"version", kToolVersion}, {"command", "covrad"}};
            j["code"] = src.descriptor;
            Json radii = Json::array();
            std::string text;
            for (auto m : metrics_of(covrad_metrics)) {
                const auto r = covering_radius(src.code, m, budget);
                radii.push_back({{"metric", metric_name(m)}, {"value", r.value}, {"method", oracle_name(r.method)}});
                text += "r_" + std::string(metric_name(m)) + " = " + std::to_string(r.value) + " (" +
                        std::string(oracle_name(r.method)) + ")\n";
            }
            j["radii"] = radii;
            emit(table ? text : dump(j), output);
        }
    } catch (const ParseError& e) {
        return fail(e.kind(), e.what(), parse_failure);
    } catch (const ParameterError& e) {
        return fail(e.kind(), e.what(), parameter_failure);
    } catch (const DimensionError& e) {
        return fail(e.kind(), e.what(), parameter_failure);
    } catch (const BudgetError& e) {
        return fail(e.kind(), e.what(), budget_failure);
    } catch (const ConsistencyError& e) {
        return fail(e.kind(), e.what(), consistency_failure);
    }
    return ok;
}
