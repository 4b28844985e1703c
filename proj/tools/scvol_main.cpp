// Command-line front end: exact volumes and ratios, the full (d, s) table,
// the self-check suites, and the Monte-Carlo cross-validation, with JSON,
// CSV and markdown output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "scvol/mc.hpp"
#include "scvol/verify.hpp"
#include "scvol/volumes.hpp"

namespace {

using scvol::Rational;
using ordered_json = nlohmann::ordered_json;

std::string approx_str(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

std::string pretty(const Rational& r) { return r.str() + " (≈ " + approx_str(r.to_double()) + ")"; }

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct MethodSelection {
    bool all = false;
    bool legendre = false;
    scvol::RatioMethod method = scvol::RatioMethod::BinomDet;
};

MethodSelection parse_method(const std::string& name) {
    MethodSelection sel;
    if (name == "all") {
        sel.all = true;
        return sel;
    }
    if (name == "legendre") {
        sel.legendre = true;
        return sel;
    }
    auto m = scvol::ratio_method_from_string(name);
    if (!m)
        throw std::domain_error("unknown method '" + name +
                                "' (expected trinomial|hilbert|binomdet|evenalt|detmix|legendre|all)");
    sel.method = *m;
    return sel;
}

Rational ratio_by_name(int d, int s, const MethodSelection& sel) {
    if (sel.legendre) {
        if (s != 1) throw std::domain_error("method legendre applies only to s = 1");
        scvol::validate_signature(d, s);
        return scvol::ratio_legendre_s1(d);
    }
    return scvol::ratio(d, s, sel.method);
}

int run_volume(int d, int s, const std::string& method_name, const std::string& format) {
    MethodSelection sel = parse_method(method_name);
    if (sel.all) throw std::domain_error("volume: method 'all' is only available for ratio");
    Rational value = scvol::v_real(d) * ratio_by_name(d, s, sel);
    if (format == "json") {
        ordered_json j;
        j["d"] = d;
        j["s"] = s;
        j["method"] = method_name;
        j["value"] = value.fraction_str();
        j["approx"] = value.to_double();
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "d,s,method,value,approx\n"
                  << d << "," << s << "," << method_name << "," << value.fraction_str() << ","
                  << approx_str(value.to_double()) << "\n";
    } else {
        std::cout << pretty(value) << "\n";
    }
    return 0;
}

int run_ratio(int d, int s, const std::string& method_name, const std::string& format) {
    MethodSelection sel = parse_method(method_name);
    if (!sel.all) {
        Rational value = ratio_by_name(d, s, sel);
        if (format == "json") {
            ordered_json j;
            j["d"] = d;
            j["s"] = s;
            j["method"] = method_name;
            j["value"] = value.fraction_str();
            j["approx"] = value.to_double();
            emit_json(j);
        } else if (format == "csv") {
            std::cout << "d,s,method,value,approx\n"
                      << d << "," << s << "," << method_name << "," << value.fraction_str()
                      << "," << approx_str(value.to_double()) << "\n";
        } else {
            std::cout << pretty(value) << "\n";
        }
        return 0;
    }

    // Every applicable path, asserting bit-exact agreement.
    scvol::validate_signature(d, s);
    std::vector<std::pair<std::string, Rational>> paths;
    for (scvol::RatioMethod m :
         {scvol::RatioMethod::Trinomial, scvol::RatioMethod::Hilbert, scvol::RatioMethod::BinomDet,
          scvol::RatioMethod::EvenAlt, scvol::RatioMethod::DetMix}) {
        if (m == scvol::RatioMethod::EvenAlt && d % 2 != 0) continue;
        paths.emplace_back(scvol::to_string(m), scvol::ratio(d, s, m));
    }
    if (s == 1) paths.emplace_back("legendre", scvol::ratio_legendre_s1(d));
    bool agree = true;
    for (const auto& [name, value] : paths) agree = agree && value == paths.front().second;

    if (format == "json") {
        ordered_json j;
        j["d"] = d;
        j["s"] = s;
        j["paths"] = ordered_json::array();
        for (const auto& [name, value] : paths)
            j["paths"].push_back(ordered_json{{"method", name}, {"value", value.fraction_str()}});
        j["agree"] = agree;
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "d,s,method,value\n";
        for (const auto& [name, value] : paths)
            std::cout << d << "," << s << "," << name << "," << value.fraction_str() << "\n";
    } else {
        for (const auto& [name, value] : paths)
            std::cout << std::left << std::setw(11) << (name + ":") << value << "\n";
        std::cout << "agreement: " << (agree ? "yes" : "MISMATCH") << "\n";
    }
    if (!agree) {
        std::cerr << "error: formula paths disagree\n";
        return 1;
    }
    return 0;
}

int run_table(int d_max, const std::string& format, int threads) {
    scvol::VolumeTable table = scvol::volume_table(d_max, threads);
    const int s_max = d_max / 2;

    // Cell lookup by (d, s); records are ordered so a plain scan suffices.
    auto cell = [&](int d, int s) -> const Rational* {
        for (const auto& rec : table.records)
            if (rec.sig.d == d && rec.sig.s == s) return &rec.value;
        return nullptr;
    };

    bool all_ok = true;
    for (int d = 1; d <= d_max; ++d)
        all_ok = all_ok && table.row_sums[static_cast<std::size_t>(d - 1)] ==
                               table.full_volumes[static_cast<std::size_t>(d - 1)];

    if (format == "json") {
        ordered_json j;
        j["dmax"] = d_max;
        j["rows"] = ordered_json::array();
        for (int d = 1; d <= d_max; ++d) {
            ordered_json row;
            row["d"] = d;
            row["cells"] = ordered_json::array();
            for (int s = 0; 2 * s <= d; ++s) {
                const Rational* v = cell(d, s);
                row["cells"].push_back(ordered_json{
                    {"s", s}, {"value", v->fraction_str()}, {"approx", v->to_double()}});
            }
            const Rational& sum = table.row_sums[static_cast<std::size_t>(d - 1)];
            const Rational& full = table.full_volumes[static_cast<std::size_t>(d - 1)];
            row["row_sum"] = sum.fraction_str();
            row["v_full"] = full.fraction_str();
            row["ok"] = sum == full;
            j["rows"].push_back(row);
        }
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "d";
        for (int s = 0; s <= s_max; ++s) std::cout << ",s=" << s;
        std::cout << ",row_sum,v_full,ok\n";
        for (int d = 1; d <= d_max; ++d) {
            std::cout << d;
            for (int s = 0; s <= s_max; ++s) {
                std::cout << ",";
                if (const Rational* v = cell(d, s); v && 2 * s <= d)
                    std::cout << v->fraction_str();
            }
            const Rational& sum = table.row_sums[static_cast<std::size_t>(d - 1)];
            const Rational& full = table.full_volumes[static_cast<std::size_t>(d - 1)];
            std::cout << "," << sum.fraction_str() << "," << full.fraction_str() << ","
                      << (sum == full ? "yes" : "MISMATCH") << "\n";
        }
    } else {
        std::cout << "| d |";
        for (int s = 0; s <= s_max; ++s) std::cout << " s=" << s << " |";
        std::cout << " row sum | v_full | ok |\n";
        std::cout << "|---|";
        for (int s = 0; s <= s_max; ++s) std::cout << "---|";
        std::cout << "---|---|---|\n";
        for (int d = 1; d <= d_max; ++d) {
            std::cout << "| " << d << " |";
            for (int s = 0; s <= s_max; ++s) {
                if (2 * s <= d) {
                    const Rational* v = cell(d, s);
                    std::cout << " " << v->str() << " (" << approx_str(v->to_double()) << ") |";
                } else {
                    std::cout << "  |";
                }
            }
            const Rational& sum = table.row_sums[static_cast<std::size_t>(d - 1)];
            const Rational& full = table.full_volumes[static_cast<std::size_t>(d - 1)];
            std::cout << " " << sum.str() << " | " << full.str() << " | "
                      << (sum == full ? "yes" : "MISMATCH") << " |\n";
        }
    }
    return all_ok ? 0 : 1;
}

int run_verify(const std::string& suite, const std::string& format) {
    std::vector<scvol::CheckResult> results = scvol::verify_suite(suite);
    bool all_pass = true;
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& r : results) {
            j.push_back(ordered_json{
                {"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        emit_json(j);
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.name;
            if (!r.pass) std::cout << " -- " << r.detail;
            std::cout << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}

int run_mc(int d, std::uint64_t samples, std::uint64_t seed, int threads,
           const std::string& format) {
    if (d > 6)
        std::cerr << "warning: the sampling box grows quickly with d; estimates for d > 6 "
                     "are likely uninformative at practical sample counts\n";
    scvol::McReport report = scvol::mc_estimate(d, samples, seed, threads);

    std::vector<Rational> exact;
    for (int s = 0; 2 * s <= d; ++s) exact.push_back(scvol::volume(d, s));
    auto z_score = [](double estimate, double exact_value, double stderr_value) {
        if (stderr_value == 0.0)
            return estimate == exact_value ? 0.0 : std::numeric_limits<double>::infinity();
        return (estimate - exact_value) / stderr_value;
    };

    if (format == "json") {
        ordered_json j;
        j["d"] = report.d;
        j["samples"] = report.samples;
        j["seed"] = report.seed;
        j["box_volume"] = report.box_volume.fraction_str();
        j["per_s"] = ordered_json::array();
        for (const auto& cell : report.per_s) {
            double ex = exact[static_cast<std::size_t>(cell.s)].to_double();
            j["per_s"].push_back(ordered_json{
                {"s", cell.s},
                {"hits", cell.hits},
                {"estimate", cell.estimate},
                {"stderr", cell.std_error},
                {"exact", exact[static_cast<std::size_t>(cell.s)].fraction_str()},
                {"z", z_score(cell.estimate, ex, cell.std_error)}});
        }
        j["degenerate"] = report.degenerate;
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "s,hits,estimate,stderr,exact,z\n";
        for (const auto& cell : report.per_s) {
            double ex = exact[static_cast<std::size_t>(cell.s)].to_double();
            std::cout << cell.s << "," << cell.hits << "," << cell.estimate << ","
                      << cell.std_error << "," << exact[static_cast<std::size_t>(cell.s)].fraction_str()
                      << "," << z_score(cell.estimate, ex, cell.std_error) << "\n";
        }
    } else {
        std::cout << "MC estimate: d=" << report.d << ", samples=" << report.samples
                  << ", seed=" << report.seed << ", box volume " << report.box_volume.str()
                  << "\n";
        std::cout << "| s | hits | estimate | stderr | exact | z |\n";
        std::cout << "|---|------|----------|--------|-------|---|\n";
        for (const auto& cell : report.per_s) {
            double ex = exact[static_cast<std::size_t>(cell.s)].to_double();
            std::cout << "| " << cell.s << " | " << cell.hits << " | "
                      << approx_str(cell.estimate) << " | " << approx_str(cell.std_error)
                      << " | " << exact[static_cast<std::size_t>(cell.s)].str() << " ("
                      << approx_str(ex) << ") | " << approx_str(z_score(cell.estimate, ex, cell.std_error))
                      << " |\n";
        }
        std::cout << "degenerate draws: " << report.degenerate << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact volumes of the Schur-Cohn region partitioned by root signature"};
    app.require_subcommand(1);

    std::string format = "markdown";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "markdown"}));
    };

    int d = 1, s = 0, d_max = 8, threads = 0;
    std::string method = "binomdet";
    std::string suite = "all";
    std::uint64_t samples = 1000000, seed = 1;

    CLI::App* volume = app.add_subcommand("volume", "Exact volume of one signature cell");
    volume->add_option("--d", d, "Polynomial degree")->required();
    volume->add_option("--s", s, "Pairs of nonreal roots")->required();
    volume->add_option("--method", method, "Formula path");
    add_format(volume);

    CLI::App* ratio_cmd = app.add_subcommand("ratio", "Integer ratio of a cell to the all-real cell");
    ratio_cmd->add_option("--d", d, "Polynomial degree")->required();
    ratio_cmd->add_option("--s", s, "Pairs of nonreal roots")->required();
    ratio_cmd->add_option("--method", method, "Formula path, or 'all' to cross-check every path");
    add_format(ratio_cmd);

    CLI::App* table = app.add_subcommand("table", "Full (d, s) volume grid with row checksums");
    table->add_option("--dmax", d_max, "Largest degree")->required();
    table->add_option("--threads", threads, "Worker count (0 = auto)");
    add_format(table);

    CLI::App* verify = app.add_subcommand("verify", "Run the named self-check suite");
    verify->add_option("--suite", suite, "identities|convolution|signs|volumes|integrality|all");
    add_format(verify);

    CLI::App* mc = app.add_subcommand("mc", "Monte-Carlo estimate vs the exact values");
    mc->add_option("--d", d, "Polynomial degree")->required();
    mc->add_option("--samples", samples, "Sample count");
    mc->add_option("--seed", seed, "RNG seed");
    mc->add_option("--threads", threads, "Worker count (0 = auto)");
    add_format(mc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(volume)) return run_volume(d, s, method, format);
        if (app.got_subcommand(ratio_cmd)) return run_ratio(d, s, method, format);
        if (app.got_subcommand(table)) return run_table(d_max, format, threads);
        if (app.got_subcommand(verify)) return run_verify(suite, format);
        if (app.got_subcommand(mc)) return run_mc(d, samples, seed, threads, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
