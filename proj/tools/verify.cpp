#include "flagbethe/checks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

// flat key=value file, '#' comments; CLI flags override
std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

std::vector<fb::Rat> parse_rat_list(const std::string& s, const std::string& what) {
    std::vector<fb::Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(fb::Rat(tok));
        } catch (...) {
            throw CLI::ValidationError(what, "bad rational value '" + tok + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError(what, "empty list");
    return out;
}

void apply_k_mode(fb::CheckConfig& cfg, const std::string& s) {
    if (s == "symbolic") {
        cfg.k_mode = "symbolic";
    } else if (s.rfind("values=", 0) == 0) {
        cfg.k_mode = "values";
        cfg.k_values = parse_rat_list(s.substr(7), "--k-mode");
    } else if (s.rfind("zone=", 0) == 0) {
        cfg.k_mode = "zone";
        cfg.zone_scales = parse_rat_list(s.substr(5), "--k-mode");
        for (auto& c : cfg.zone_scales)
            if (c <= 1) throw CLI::ValidationError("--k-mode", "zone scale must be > 1");
    } else {
        throw CLI::ValidationError("--k-mode", "expected symbolic|values=...|zone=...");
    }
}

void apply_z_mode(fb::CheckConfig& cfg, const std::string& s) {
    if (s == "symbolic") {
        cfg.z_mode = "symbolic";
    } else if (s.rfind("seed=", 0) == 0) {
        cfg.z_mode = "seed";
        cfg.seed = unsigned(std::stoul(s.substr(5)));
    } else {
        throw CLI::ValidationError("--z-mode", "expected symbolic|seed=<int>");
    }
}

void apply_lambda(fb::CheckConfig& cfg, const std::string& s) {
    fb::Weight w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.comps.push_back(unsigned(std::stoul(tok)));
    if (w.comps.empty()) throw CLI::ValidationError("--lambda", "empty weight");
    cfg.lam = w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification harness for the Bethe-algebra cohomology artifact"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "enumerate the check catalog");

    auto* run = app.add_subcommand("run", "run checks and write a report");
    std::string check = "all", lambda_s, k_mode_s, z_mode_s, report_path, config_path;
    fb::CheckConfig cfg;
    run->add_option("--check", check, "check name or 'all'");
    run->add_option("--N", cfg.N, "number of blocks (0 = default grid)");
    run->add_option("--n", cfg.n, "tensor factors (0 = default grid)");
    run->add_option("--lambda", lambda_s, "weight, comma-separated (requires --N, --n)");
    run->add_option("--jmax", cfg.jmax, "series truncation order");
    run->add_option("--k-mode", k_mode_s, "symbolic | values=v1,v2 | zone=c1,c2,...");
    run->add_option("--z-mode", z_mode_s, "symbolic | seed=<int>");
    run->add_option("--degree-bound", cfg.degree_bound, "degree bound for rank checks");
    run->add_option("--report", report_path, "report output path")->required();
    run->add_option("--config", config_path, "flat key=value config file");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        for (auto& c : fb::check_catalog())
            std::cout << c.name << "\t" << c.anchor << "\t" << c.summary << "\n";
        return 0;
    }

    try {
        if (!config_path.empty()) {
            auto kv = load_config_file(config_path);
            auto has = [&](const char* k) { return kv.count(k) != 0; };
            if (has("check") && !run->count("--check")) check = kv["check"];
            if (has("N") && !run->count("--N")) cfg.N = unsigned(std::stoul(kv["N"]));
            if (has("n") && !run->count("--n")) cfg.n = unsigned(std::stoul(kv["n"]));
            if (has("lambda") && !run->count("--lambda")) lambda_s = kv["lambda"];
            if (has("jmax") && !run->count("--jmax")) cfg.jmax = std::stoi(kv["jmax"]);
            if (has("k-mode") && !run->count("--k-mode")) k_mode_s = kv["k-mode"];
            if (has("z-mode") && !run->count("--z-mode")) z_mode_s = kv["z-mode"];
            if (has("degree-bound") && !run->count("--degree-bound"))
                cfg.degree_bound = std::stoi(kv["degree-bound"]);
        }
        cfg.check = check;
        if (!lambda_s.empty()) apply_lambda(cfg, lambda_s);
        if (!k_mode_s.empty()) apply_k_mode(cfg, k_mode_s);
        if (!z_mode_s.empty()) apply_z_mode(cfg, z_mode_s);
        if (cfg.lam) {
            if (!cfg.N || !cfg.n || cfg.lam->N() != cfg.N || cfg.lam->n() != cfg.n) {
                std::cerr << "error: --lambda must match --N and --n\n";
                return 2;
            }
        }

        auto reports = fb::run_checks(cfg);
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write report to " << report_path << "\n";
            return 2;
        }
        out << fb::render_reports(reports);

        std::size_t pass = 0, fail = 0, skip = 0;
        for (auto& r : reports) {
            if (r.status == "pass") ++pass;
            else if (r.status == "fail") ++fail;
            else ++skip;
        }
        std::cout << "cells: " << reports.size() << "  pass: " << pass
                  << "  fail: " << fail << "  skipped: " << skip << "\n";
        return fail ? 1 : 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
