// Command-line front end: reconstructs the order-4 descent instance, tests
// local solubility, searches the quotient surface for rational points, and
// emits machine-checkable reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fourdescent/report.hpp"

namespace {

using fourdescent::Json;
using fourdescent::Report;
using fourdescent::RunConfig;

struct CommonOpts {
    std::string config_path;
    std::string quartic, eps, surface_p, surface_q, primes, format;
    long height = -1;
    int depth_cap = -1;
    bool assume_rank_zero = false;
    bool withhold_rank_zero = false;
    bool timings = false;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    cmd->add_option("--quartic", o.quartic, "quartic coefficients a,c,d,e");
    cmd->add_option("--eps", o.eps, "epsilon coordinates c0,c1,c2,c3");
    cmd->add_option("--surface-p", o.surface_p, "p coefficients, constant first");
    cmd->add_option("--surface-q", o.surface_q, "q coefficients, constant first");
    cmd->add_option("--height", o.height, "rational point search height bound");
    cmd->add_option("--primes", o.primes, "comma-separated prime list override");
    cmd->add_option("--depth-cap", o.depth_cap, "residue tree depth cap (0 = automatic)");
    cmd->add_flag("--assume-rank-zero", o.assume_rank_zero,
                  "grant the rank-0 external assumption (default)");
    cmd->add_flag("--withhold-rank-zero", o.withhold_rank_zero,
                  "withhold the rank-0 external assumption");
    cmd->add_option("--format", o.format, "output format: human | machine");
    cmd->add_flag("--timings", o.timings, "include wall times in the output");
    cmd->add_option("--out", o.out_path, "write the report to a file instead of stdout");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

RunConfig build_config(const CommonOpts& o) {
    RunConfig cfg = RunConfig::defaults();
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw std::invalid_argument("cannot open config file: " + o.config_path);
        Json j = Json::parse(in);
        cfg = RunConfig::from_json(j);
    }
    auto parse4 = [](const std::string& s, const char* what) {
        auto parts = split_commas(s);
        if (parts.size() != 4)
            throw std::invalid_argument(std::string(what) + ": expected 4 comma-separated rationals");
        std::array<fourdescent::Rat, 4> out;
        for (int i = 0; i < 4; ++i) out[i] = fourdescent::parse_rat(parts[i]);
        return out;
    };
    if (!o.quartic.empty()) {
        auto q = parse4(o.quartic, "--quartic");
        cfg.quartic = fourdescent::QuarticCurveModel{q[0], q[1], q[2], q[3]};
    }
    if (!o.eps.empty()) cfg.epsilon = parse4(o.eps, "--eps");
    auto parse_poly = [](const std::string& s) {
        std::vector<fourdescent::Rat> c;
        for (const auto& part : split_commas(s)) c.push_back(fourdescent::parse_rat(part));
        return fourdescent::Poly(std::move(c));
    };
    if (!o.surface_p.empty()) cfg.surface_p = parse_poly(o.surface_p);
    if (!o.surface_q.empty()) cfg.surface_q = parse_poly(o.surface_q);
    if (o.height >= 0) cfg.height = o.height;
    if (!o.primes.empty()) {
        cfg.primes_override.clear();
        for (const auto& part : split_commas(o.primes))
            cfg.primes_override.emplace_back(part.c_str());
    }
    if (o.depth_cap >= 0) cfg.depth_cap = o.depth_cap;
    if (o.assume_rank_zero) cfg.assume_rank_zero = true;
    if (o.withhold_rank_zero) cfg.assume_rank_zero = false;
    if (!o.format.empty()) {
        if (o.format == "human")
            cfg.format = RunConfig::Format::kHuman;
        else if (o.format == "machine")
            cfg.format = RunConfig::Format::kMachine;
        else
            throw std::invalid_argument("--format: expected human or machine");
    }
    if (o.timings) cfg.timings = true;
    if (cfg.height < 1) throw std::invalid_argument("--height: must be >= 1");
    return cfg;
}

int emit_and_exit(const Report& rep, const RunConfig& cfg, const CommonOpts& o) {
    std::string text = fourdescent::emit_report(rep, cfg.format, cfg.timings);
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out_path);
        if (!out) {
            std::cerr << "error: cannot write " << o.out_path << "\n";
            return 2;
        }
        out << text;
    }
    return fourdescent::exit_code_for(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of an order-4 descent instance and its quotient surface"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto* reproduce = app.add_subcommand("reproduce", "run the full verification pipeline");
    auto* resolvent = app.add_subcommand("resolvent", "resolvent Jacobian, torsion, irreducibility");
    auto* fourcover = app.add_subcommand("fourcover", "build the 4-covering and its bad primes");
    auto* local = app.add_subcommand("local", "local solubility of the 2- and 4-coverings");
    auto* surface = app.add_subcommand("surface", "surface validation and the adelic verdict");
    auto* search = app.add_subcommand("search", "rational point search on the surface");
    for (auto* cmd : {reproduce, resolvent, fourcover, local, surface, search})
        add_common(cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = build_config(opts);
        Report rep;
        if (reproduce->parsed())
            rep = fourdescent::run_reproduce(cfg);
        else if (resolvent->parsed())
            rep = fourdescent::run_resolvent(cfg);
        else if (fourcover->parsed())
            rep = fourdescent::run_fourcover(cfg);
        else if (local->parsed())
            rep = fourdescent::run_local(cfg);
        else if (surface->parsed())
            rep = fourdescent::run_surface(cfg);
        else
            rep = fourdescent::run_search(cfg);
        return emit_and_exit(rep, cfg, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fourdescent::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
