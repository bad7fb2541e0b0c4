// fcheck: verify transform characterizations from the command line.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 usage or parse
// error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fcheck/emit.hpp"
#include "fcheck/gallery.hpp"
#include "fcheck/selftest.hpp"
#include "fcheck/suite.hpp"

namespace {

using namespace fcheck::verify;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void print_reports(const std::vector<PropertyReport>& reports) {
    for (const auto& r : reports) {
        std::printf("%-4s %-22s %-10s residual=%-24s tol=%-8s %s\n", to_string(r.verdict).c_str(),
                    r.property_id.c_str(), to_string(r.role).c_str(), fmt(r.residual_max).c_str(),
                    fmt(r.tolerance).c_str(), r.notes.c_str());
    }
}

SuiteConfig load_config(const std::string& path) {
    return path.empty() ? SuiteConfig::defaults() : SuiteConfig::from_file(path);
}

int cmd_verify(const std::string& domain_name, const std::string& target, const std::string& config_path,
               const std::string& json_path, const std::string& csv_path, const std::string& plot_path) {
    const Domain d = domain_from_string(domain_name);
    const SuiteConfig cfg = load_config(config_path);
    const auto reports = run_suite(d, target, cfg);
    print_reports(reports);
    const ReportDocument doc{to_string(d), target, cfg.to_json(), reports};
    if (!json_path.empty()) write_file(json_path, to_json_string(doc));
    if (!csv_path.empty()) write_file(csv_path, to_csv(reports));
    if (!plot_path.empty()) write_file(plot_path, to_plot_csv(reports));
    const auto failing = failing_axioms(reports);
    std::string list;
    for (const auto& f : failing) list += (list.empty() ? "" : ", ") + f;
    std::printf("%s\n", failing.empty() ? "all axioms hold" : ("failing axioms: " + list).c_str());
    return all_passed(reports) ? 0 : kExitFail;
}

int cmd_gallery(bool run, const std::string& config_path) {
    if (!run) {
        for (const auto& e : gallery())
            std::printf("%-26s %-9s %-26s fails %-20s %s\n", e.name.c_str(), to_string(e.domain).c_str(),
                        e.target.c_str(), e.expected_failure.c_str(), e.description.c_str());
        for (const auto& g : gallery_gaps())
            std::printf("not isolable: %s/%s: %s\n", to_string(g.domain).c_str(), g.axiom.c_str(), g.reason.c_str());
        return 0;
    }
    bool ok = true;
    for (const auto& o : run_gallery(load_config(config_path))) {
        std::string list;
        for (const auto& f : o.failing) list += (list.empty() ? "" : ",") + f;
        std::printf("%-4s %-26s expected %-20s observed %s\n", o.isolated() ? "OK" : "BAD", o.entry.name.c_str(),
                    o.entry.expected_failure.c_str(), list.empty() ? "(none)" : list.c_str());
        ok = ok && o.isolated();
    }
    return ok ? 0 : kExitFail;
}

int cmd_demo(const std::string& domain_name, std::string target, const std::string& config_path) {
    const Domain d = domain_from_string(domain_name);
    if (target.empty()) {
        static const std::map<Domain, std::string> defaults{{Domain::Real, "builtin:fourier"},
                                                            {Domain::Discrete, "builtin:dtft"},
                                                            {Domain::Lca, "builtin:fourier"},
                                                            {Domain::Compact, "builtin:fourier"},
                                                            {Domain::Hankel, "builtin:hankel"}};
        target = defaults.at(d);
    }
    std::cout << characterize_narrative(d, target, load_config(config_path));
    return 0;
}

int cmd_selftest() {
    const auto reports = run_selftest();
    for (const auto& r : reports)
        std::printf("%-4s %-12s %-26s residual=%-24s tol=%s\n", to_string(r.verdict).c_str(), r.target_id.c_str(),
                    r.property_id.c_str(), fmt(r.residual_max).c_str(), fmt(r.tolerance).c_str());
    return all_passed(reports) ? 0 : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify the axioms that characterize Fourier-type transforms"};
    app.require_subcommand(1);

    std::string domain, target, config, json_out, csv_out, plot_out;
    auto* verify = app.add_subcommand("verify", "Run the property suite for a transform");
    verify->add_option("domain", domain, "real | discrete | lca | compact | hankel")->required();
    verify->add_option("--target", target, "builtin:<name>[:<param>] or a kernel expression")->required();
    verify->add_option("--config", config, "JSON config with tolerances, probes, seed");
    verify->add_option("--json", json_out, "write the JSON report here");
    verify->add_option("--csv", csv_out, "write one CSV row per witness here");
    verify->add_option("--plot", plot_out, "write Dirac-limit plot data here");

    bool run = false;
    auto* gal = app.add_subcommand("gallery", "List (or run) the counterexample gallery");
    gal->add_flag("--run", run, "run every entry and check that it fails exactly its axiom");
    gal->add_option("--config", config, "JSON config");

    std::string demo_domain, demo_target;
    auto* demo = app.add_subcommand("demo", "Narrated demonstrations");
    auto* characterize = demo->add_subcommand("characterize", "What the axioms recover from a transform");
    characterize->add_option("domain", demo_domain, "real | discrete | lca | compact | hankel")->required();
    characterize->add_option("--target", demo_target, "target descriptor (default: the reference transform)");
    characterize->add_option("--config", config, "JSON config");
    demo->require_subcommand(1);

    auto* self = app.add_subcommand("selftest", "Run all module invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(domain, target, config, json_out, csv_out, plot_out);
        if (gal->parsed()) return cmd_gallery(run, config);
        if (characterize->parsed()) return cmd_demo(demo_domain, demo_target, config);
        if (self->parsed()) return cmd_selftest();
    } catch (const fcheck::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fcheck::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fcheck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
