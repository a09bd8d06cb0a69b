#include "djm/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include <CLI11.hpp>

#include "djm/errors.hpp"
#include "djm/gen.hpp"
#include "djm/io.hpp"
#include "djm/matching.hpp"
#include "djm/oracle.hpp"
#include "djm/svg.hpp"

namespace djm {

namespace {

std::string fixed(double v, int digits = 4)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

RootPolicy parse_root(const std::string& text, const Drawing& d)
{
    if (text == "all") return RootPolicy::best_of_all();
    int v = 0;
    try {
        std::size_t used = 0;
        v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw InputError("--root takes a vertex index or 'all'");
    }
    if (v < 0 || v >= d.vertex_count()) throw InputError("--root out of range");
    return RootPolicy::fixed(v);
}

Drawing require_drawing(const FileInstance& inst, const std::string& command)
{
    if (!std::holds_alternative<Drawing>(inst)) throw InputError(command + " needs a drawing file, not a cylindrical drawing");
    return std::get<Drawing>(inst);
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
    if (!out) throw InputError("write to '" + path + "' failed");
}

void print_report(std::ostream& out, const ValidationReport& r)
{
    if (r.ok) {
        out << "ok\n";
        return;
    }
    out << "violations " << r.violations.size() << "\n";
    for (const Violation& v : r.violations) {
        out << to_string(v.kind) << " first=" << v.first << " second=" << v.second << " vertex=" << v.vertex;
        if (v.witness) out << " at=" << v.witness->x << "," << v.witness->y;
        out << "\n";
    }
}

void print_stats(std::ostream& out, const MatchingResult& r)
{
    const StageStats& s = r.stats;
    out << "size " << r.size << "\n";
    out << "root " << s.root << " delta " << s.delta << " u " << s.u << " columns " << s.columns << "\n";
    out << "stage_a " << s.stage_a_size << "\n";
    out << "stage_b " << s.stage_b_size << " cut_column " << s.cut_column << " kept " << s.kept_count << "\n";
    out << "chains";
    for (std::size_t k = 0; k < kOrderKinds.size(); ++k) out << " " << to_string(kOrderKinds[k]) << "=" << s.chain_lengths[k];
    out << "\n";
}

// Solves after confirming the input is simple; returns nullopt (exit 1) otherwise.
std::optional<MatchingResult> checked_solve(const Drawing& d, RootPolicy policy, std::ostream& out)
{
    ValidationReport r = validate_simple(d);
    if (!r.ok) {
        print_report(out, r);
        return std::nullopt;
    }
    return solve(d, policy);
}

}  // namespace

EstimateReport estimate_c(int delta, int trials, std::uint64_t seed, EstimateKinds kinds, std::int64_t node_limit)
{
    if (trials < 1) throw InputError("--trials must be positive");
    EstimateReport rep;
    rep.delta = delta;
    rep.trials = trials;
    rep.min = std::numeric_limits<int>::max();
    rep.selfhosted_min = std::numeric_limits<int>::max();
    rep.random_min = std::numeric_limits<int>::max();
    long long total = 0;
    for (int t = 0; t < trials; ++t) {
        bool self = kinds == EstimateKinds::SelfHosted || (kinds == EstimateKinds::Both && t % 2 == 0);
        std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(t));
        CylindricalDrawing c = self ? selfhosted_cylinder(delta, s) : random_cylinder(delta, s);
        OracleResult o = max_disjoint_bruteforce(c, node_limit);
        rep.exact = rep.exact && o.exact;
        rep.min = std::min(rep.min, o.optimum);
        rep.max = std::max(rep.max, o.optimum);
        total += o.optimum;
        if (self) {
            ++rep.selfhosted_trials;
            rep.selfhosted_min = std::min(rep.selfhosted_min, o.optimum);
        } else {
            ++rep.random_trials;
            rep.random_min = std::min(rep.random_min, o.optimum);
        }
    }
    rep.mean = static_cast<double>(total) / trials;
    if (rep.selfhosted_trials == 0) rep.selfhosted_min = 0;
    if (rep.random_trials == 0) rep.random_min = 0;
    return rep;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Large disjoint matchings in simple drawings of complete graphs"};
    app.require_subcommand(1, 1);

    std::string kind_text;
    int size = 0;
    std::uint64_t seed = 0;
    std::string output;
    std::string input;
    std::string root_text = "0";
    std::int64_t limit = kDefaultNodeLimit;
    int trials = 200;
    std::string kinds_text = "both";
    std::string matching_path;
    int subgraph_root = -1;
    bool json_report = false;

    CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--kind", kind_text, "convex | random-points | cyl-selfhosted | cyl-random")->required();
    gen->add_option("--n,--delta", size, "Vertex count, or column count for cylindrical kinds")->required();
    gen->add_option("--seed", seed, "64-bit seed");
    gen->add_option("-o,--output", output, "Output file (default: stdout)");

    CLI::App* validate = app.add_subcommand("validate", "Check a drawing or cylindrical drawing");
    validate->add_option("file", input)->required();
    validate->add_flag("--json", json_report, "Print the report as JSON");

    CLI::App* solve_cmd = app.add_subcommand("solve", "Find a certified disjoint matching");
    solve_cmd->add_option("file", input)->required();
    solve_cmd->add_option("--root", root_text, "Root vertex or 'all'");
    solve_cmd->add_option("-o,--output", output, "Write the matching as JSON");

    CLI::App* oracle = app.add_subcommand("oracle", "Exact maximum disjoint matching (small inputs)");
    oracle->add_option("file", input)->required();
    oracle->add_option("--limit", limit, "Search node limit");
    oracle->add_option("-o,--output", output, "Write the witness as JSON");

    CLI::App* compare = app.add_subcommand("compare", "Solve and oracle side by side");
    compare->add_option("file", input)->required();
    compare->add_option("--root", root_text, "Root vertex or 'all'");
    compare->add_option("--limit", limit, "Search node limit");

    CLI::App* estimate = app.add_subcommand("estimate-c", "Maximum disjoint matchings of random cylindrical drawings");
    estimate->add_option("--delta", size, "Number of columns")->required();
    estimate->add_option("--trials", trials, "Number of instances");
    estimate->add_option("--seed", seed, "64-bit seed");
    estimate->add_option("--kinds", kinds_text, "both | selfhosted | random");
    estimate->add_option("--limit", limit, "Search node limit per instance");
    estimate->add_option("-o,--output", output, "Write the report as JSON");

    CLI::App* svg = app.add_subcommand("svg", "Render a drawing as SVG");
    svg->add_option("file", input)->required();
    svg->add_option("-o,--output", output, "SVG file")->required();
    svg->add_option("--matching", matching_path, "Matching JSON to highlight");
    svg->add_option("--subgraph-root", subgraph_root, "Overlay the plane subgraph grown from this root");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            Instance inst = generate({parse_gen_kind(kind_text), size, seed});
            Json j = std::visit([](const auto& x) { return to_json(x); }, inst);
            if (output.empty()) out << dump(j);
            else write_json_file(output, j);
            return kExitOk;
        }

        if (validate->parsed()) {
            FileInstance inst = read_instance(input);
            ValidationReport r = std::holds_alternative<Drawing>(inst) ? validate_simple(std::get<Drawing>(inst))
                                                                       : validate_cylindrical(std::get<CylindricalDrawing>(inst));
            if (json_report) out << dump(to_json(r));
            else print_report(out, r);
            return r.ok ? kExitOk : kExitInvalid;
        }

        if (solve_cmd->parsed()) {
            Drawing d = require_drawing(read_instance(input), "solve");
            auto r = checked_solve(d, parse_root(root_text, d), out);
            if (!r) return kExitInvalid;
            print_stats(out, *r);
            if (!output.empty()) write_json_file(output, to_json(*r, d));
            return kExitOk;
        }

        if (oracle->parsed()) {
            FileInstance inst = read_instance(input);
            OracleResult o;
            if (std::holds_alternative<Drawing>(inst)) {
                const Drawing& d = std::get<Drawing>(inst);
                ValidationReport r = validate_simple(d);
                if (!r.ok) {
                    print_report(out, r);
                    return kExitInvalid;
                }
                o = max_disjoint_bruteforce(d, limit);
                if (!output.empty()) write_json_file(output, to_json(o, d));
            } else {
                o = max_disjoint_bruteforce(std::get<CylindricalDrawing>(inst), limit);
            }
            out << "optimum " << o.optimum << "\n";
            out << "exact " << (o.exact ? "true" : "false") << "\n";
            out << "explored " << o.explored << "\n";
            return kExitOk;
        }

        if (compare->parsed()) {
            Drawing d = require_drawing(read_instance(input), "compare");
            auto r = checked_solve(d, parse_root(root_text, d), out);
            if (!r) return kExitInvalid;
            OracleResult o = max_disjoint_bruteforce(d, limit);
            out << "solve " << r->size << "\n";
            out << "oracle " << o.optimum << (o.exact ? "" : " (lower bound, node limit reached)") << "\n";
            out << "ratio " << fixed(o.optimum > 0 ? double(r->size) / o.optimum : 1.0) << "\n";
            return kExitOk;
        }

        if (estimate->parsed()) {
            EstimateKinds kinds;
            if (kinds_text == "both") kinds = EstimateKinds::Both;
            else if (kinds_text == "selfhosted") kinds = EstimateKinds::SelfHosted;
            else if (kinds_text == "random") kinds = EstimateKinds::Random;
            else throw InputError("--kinds takes both, selfhosted or random");
            EstimateReport rep = estimate_c(size, trials, seed, kinds, limit);
            out << "delta " << rep.delta << " trials " << rep.trials << "\n";
            out << "min " << rep.min << " mean " << fixed(rep.mean) << " max " << rep.max << "\n";
            out << "selfhosted trials " << rep.selfhosted_trials << " min " << rep.selfhosted_min << "\n";
            out << "random trials " << rep.random_trials << " min " << rep.random_min << "\n";
            out << "exact " << (rep.exact ? "true" : "false") << "\n";
            if (!output.empty()) {
                Json j;
                j["delta"] = rep.delta;
                j["trials"] = rep.trials;
                j["seed"] = seed;
                j["kinds"] = kinds_text;
                j["min"] = rep.min;
                j["mean"] = fixed(rep.mean);
                j["max"] = rep.max;
                j["selfhosted_trials"] = rep.selfhosted_trials;
                j["selfhosted_min"] = rep.selfhosted_min;
                j["random_trials"] = rep.random_trials;
                j["random_min"] = rep.random_min;
                j["exact"] = rep.exact;
                write_json_file(output, j);
            }
            return kExitOk;
        }

        if (svg->parsed()) {
            FileInstance inst = read_instance(input);
            SvgOptions opt;
            if (std::holds_alternative<CylindricalDrawing>(inst)) {
                write_text(output, cylinder_svg(std::get<CylindricalDrawing>(inst), opt));
                return kExitOk;
            }
            const Drawing& d = std::get<Drawing>(inst);
            if (!matching_path.empty()) {
                MatchingResult m = matching_from_json(read_json_file(matching_path), d);
                opt.highlight.insert(m.edges.begin(), m.edges.end());
            }
            if (subgraph_root >= 0) {
                if (subgraph_root >= d.vertex_count()) throw InputError("--subgraph-root out of range");
                PlaneSubgraph g = grow_plane_subgraph(d, subgraph_root);
                opt.subgraph = g.edges();
            }
            write_text(output, drawing_svg(d, opt));
            return kExitOk;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GenerationFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegeneracyError& e) {
        err << "invalid drawing: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        err << "violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace djm
