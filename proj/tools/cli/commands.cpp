#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsrm/baseline.hpp"
#include "qsrm/error.hpp"
#include "qsrm/glauber.hpp"
#include "qsrm/gus.hpp"

namespace qsrm::cli {
namespace {

std::string fmt_g(double x, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

[[noreturn]] void bad_flag(const std::string &flag, const std::string &why) {
    throw Error(ErrorCode::InvalidArgument, flag + " " + why);
}

void check_accuracy(const std::string &flag, double value) {
    if (!(value > 0.0 && value < 0.1)) {
        bad_flag(flag, "must lie in (0, 0.1), got " + fmt_g(value));
    }
}

void check_noise(const std::string &flag, double value) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        bad_flag(flag, "must be a finite value >= 0, got " + fmt_g(value));
    }
}

void validate(const PointSpec &spec) {
    if (spec.modulation.size < 2) {
        bad_flag(spec.modulation.kind == Modulation::Kind::Psk ? "--m" : "--l", "must be >= 2");
    }
    if (!(spec.ns > 0.0) || !std::isfinite(spec.ns)) {
        bad_flag("--ns", "must be > 0, got " + fmt_g(spec.ns));
    }
    check_noise("--noise", spec.noise);
    check_accuracy("--eps", spec.epsilon);
    check_accuracy("--nu", spec.nu);
    if (spec.dimension < 0 || spec.dimension == 1) {
        bad_flag("--n", "must be 0 (automatic) or >= 2");
    }
}

bool is_binary(const Modulation &modulation) {
    return modulation.kind == Modulation::Kind::Psk && modulation.size == 2;
}

double binary_helstrom(double ns, double noise, int n) {
    const double a = std::sqrt(ns);
    const ThermalNoise thermal(noise);
    return helstrom_binary_pe(thermal_density({Complex(a, 0.0)}, thermal, n),
                              thermal_density({Complex(-a, 0.0)}, thermal, n), 0.5, 0.5);
}

std::string opt_field(const std::optional<double> &v) {
    return v ? fmt_g(*v) : std::string();
}

}  // namespace

DetectionResult compute_point(const PointSpec &spec) {
    validate(spec);
    const Constellation c = spec.modulation.make(spec.ns);
    DetectionOptions options;
    options.epsilon = spec.epsilon;
    options.nu = spec.nu;
    options.metric = spec.metric;
    options.dimension = spec.dimension;
    options.route = spec.route;
    const ThermalNoise noise(spec.noise);
    if (c.gus && spec.route == Route::Auto) {
        return evaluate_gus(c, noise, options);
    }
    return evaluate_srm(c, noise, options);
}

void validate(const SweepSpec &spec) {
    if (spec.modulation.size < 2) {
        bad_flag(spec.modulation.kind == Modulation::Kind::Psk ? "--m" : "--l", "must be >= 2");
    }
    if (spec.ns_grid.empty()) {
        bad_flag("--ns", "list is empty");
    }
    if (spec.noise_list.empty()) {
        bad_flag("--noise", "list is empty");
    }
    for (std::size_t i = 0; i < spec.ns_grid.size(); ++i) {
        if (!(spec.ns_grid[i] > 0.0) || !std::isfinite(spec.ns_grid[i])) {
            bad_flag("--ns", "values must be > 0, got " + fmt_g(spec.ns_grid[i]));
        }
        if (i > 0 && !(spec.ns_grid[i] > spec.ns_grid[i - 1])) {
            bad_flag("--ns", "values must be strictly increasing");
        }
    }
    for (double noise : spec.noise_list) {
        check_noise("--noise", noise);
    }
    check_accuracy("--eps", spec.epsilon);
    check_accuracy("--nu", spec.nu);
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec, unsigned workers) {
    validate(spec);
    std::vector<SweepRow> rows;
    for (double noise : spec.noise_list) {
        for (double ns : spec.ns_grid) {
            SweepRow row;
            row.ns = ns;
            row.noise = noise;
            rows.push_back(row);
        }
    }

    std::vector<std::exception_ptr> failures(rows.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            SweepRow &row = rows[i];
            try {
                PointSpec point;
                point.modulation = spec.modulation;
                point.ns = row.ns;
                point.noise = row.noise;
                point.epsilon = spec.epsilon;
                point.nu = spec.nu;
                const DetectionResult r = compute_point(point);
                row.n_dim = r.meta.n;
                row.pe_srm = r.pe;
                if (spec.homodyne) {
                    row.pe_homodyne = homodyne_pe(spec.modulation, row.ns, row.noise);
                }
                if (spec.helstrom && is_binary(spec.modulation)) {
                    row.pe_helstrom = binary_helstrom(row.ns, row.noise, r.meta.n);
                }
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    const unsigned count =
        std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) {
        pool.emplace_back(work);
    }
    work();
    for (std::thread &t : pool) {
        t.join();
    }
    for (const std::exception_ptr &e : failures) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

void write_csv(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRow> &rows) {
    const std::string label = spec.modulation.label();
    out << "modulation,ns,noise,n_dim,pe_srm,pe_homodyne,pe_helstrom\n";
    for (const SweepRow &row : rows) {
        out << label << ',' << fmt_g(row.ns) << ',' << fmt_g(row.noise) << ',' << row.n_dim << ','
            << fmt_g(row.pe_srm) << ',' << opt_field(row.pe_homodyne) << ','
            << opt_field(row.pe_helstrom) << '\n';
    }
}

void write_json(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRow> &rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const SweepRow &row : rows) {
        nlohmann::json r{{"modulation", spec.modulation.label()},
                         {"ns", row.ns},
                         {"noise", row.noise},
                         {"n_dim", row.n_dim},
                         {"pe_srm", row.pe_srm},
                         {"pe_homodyne", nullptr},
                         {"pe_helstrom", nullptr}};
        if (row.pe_homodyne) {
            r["pe_homodyne"] = *row.pe_homodyne;
        }
        if (row.pe_helstrom) {
            r["pe_helstrom"] = *row.pe_helstrom;
        }
        j.push_back(std::move(r));
    }
    out << j.dump(2) << '\n';
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("QSRM_THREADS")) {
        char *end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) {
            hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
        }
    }
    return hw;
}

namespace {

Modulation parse_modulation(const std::string &mod, int m, int l) {
    return mod == "qam" ? Modulation::qam(l) : Modulation::psk(m);
}

void print_point_text(std::ostream &out, const PointSpec &spec, const DetectionResult &r) {
    out << "modulation " << spec.modulation.label() << "  ns " << fmt_g(spec.ns) << "  noise "
        << fmt_g(spec.noise) << '\n';
    out << "n " << r.meta.n << "  route " << r.meta.route << "  ranks";
    for (int rank : r.meta.ranks) {
        out << ' ' << rank;
    }
    out << '\n';
    out << "pc " << fmt_g(r.pc) << "\npe " << fmt_g(r.pe) << "\ntransition\n";
    for (Eigen::Index i = 0; i < r.transition.rows(); ++i) {
        for (Eigen::Index j = 0; j < r.transition.cols(); ++j) {
            out << (j == 0 ? "  " : " ") << fmt_g(r.transition(i, j), 6);
        }
        out << '\n';
    }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Square-root measurement error probabilities for PSK and QAM in thermal noise",
                 "qsrm"};
    app.require_subcommand(1);

    // point
    PointSpec point;
    std::string point_mod = "psk";
    int point_m = 4;
    int point_l = 4;
    std::optional<double> point_eps;
    std::string point_metric = "max";
    std::string point_route = "auto";
    std::string point_format = "json";
    CLI::App *point_cmd = app.add_subcommand("point", "Evaluate a single detection point");
    point_cmd->add_option("--mod", point_mod, "Modulation")->check(CLI::IsMember({"psk", "qam"}));
    point_cmd->add_option("--m", point_m, "PSK order");
    point_cmd->add_option("--l", point_l, "QAM side (L x L points)");
    point_cmd->add_option("--ns", point.ns, "Average photons per symbol");
    point_cmd->add_option("--noise", point.noise, "Thermal photons N");
    point_cmd->add_option("--eps", point_eps, "Truncation accuracy (1e-5 PSK, 1e-7 QAM)");
    point_cmd->add_option("--nu", point.nu, "Practical-rank accuracy");
    point_cmd->add_option("--n", point.dimension, "Fock dimension, 0 derives it from --eps");
    point_cmd->add_option("--metric", point_metric, "Rank error metric")
        ->check(CLI::IsMember({"max", "mse"}));
    point_cmd->add_option("--route", point_route, "Square-root route")
        ->check(CLI::IsMember({"auto", "via_T", "via_G"}));
    point_cmd->add_option("--format", point_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    // sweep
    SweepSpec sweep;
    std::string sweep_mod = "psk";
    int sweep_m = 4;
    int sweep_l = 4;
    std::optional<double> sweep_eps;
    std::string sweep_out;
    std::string sweep_format = "csv";
    bool no_homodyne = false;
    bool no_helstrom = false;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Tabulate Pe over Ns and N grids");
    sweep_cmd->add_option("--mod", sweep_mod, "Modulation")->check(CLI::IsMember({"psk", "qam"}));
    sweep_cmd->add_option("--m", sweep_m, "PSK order");
    sweep_cmd->add_option("--l", sweep_l, "QAM side (L x L points)");
    sweep_cmd->add_option("--ns", sweep.ns_grid, "Increasing Ns grid")->delimiter(',');
    sweep_cmd->add_option("--noise", sweep.noise_list, "Thermal photon levels")->delimiter(',');
    sweep_cmd->add_option("--eps", sweep_eps, "Truncation accuracy (1e-5 PSK, 1e-7 QAM)");
    sweep_cmd->add_option("--nu", sweep.nu, "Practical-rank accuracy");
    sweep_cmd->add_option("--out", sweep_out, "Output file (stdout when omitted)");
    sweep_cmd->add_option("--format", sweep_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_flag("--no-homodyne", no_homodyne, "Skip the homodyne column");
    sweep_cmd->add_flag("--no-helstrom", no_helstrom, "Skip the Helstrom column");

    // example
    std::string example_name;
    CLI::App *example_cmd = app.add_subcommand("example", "Check a reference worked example");
    example_cmd->add_option("name", example_name, "psk4-worked | qam16-worked | rank-demo")
        ->required();

    std::vector<const char *> argv{"qsrm"};
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (point_cmd->parsed()) {
            point.modulation = parse_modulation(point_mod, point_m, point_l);
            point.epsilon = point_eps.value_or(point_mod == "qam" ? 1e-7 : 1e-5);
            point.metric = point_metric == "mse" ? ErrorMetric::MeanSquare : ErrorMetric::MaxAbs;
            point.route = point_route == "via_T"   ? Route::ViaT
                          : point_route == "via_G" ? Route::ViaG
                                                   : Route::Auto;
            validate(point);
            const DetectionResult r = compute_point(point);
            if (point_format == "text") {
                print_point_text(out, point, r);
            } else {
                nlohmann::json j = r;
                j["modulation"] = point.modulation.label();
                j["ns"] = point.ns;
                j["noise"] = point.noise;
                out << j.dump(2) << '\n';
            }
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            sweep.modulation = parse_modulation(sweep_mod, sweep_m, sweep_l);
            sweep.epsilon = sweep_eps.value_or(sweep_mod == "qam" ? 1e-7 : 1e-5);
            sweep.homodyne = !no_homodyne;
            sweep.helstrom = !no_helstrom;
            validate(sweep);
            std::ofstream file;
            if (!sweep_out.empty()) {
                file.open(sweep_out, std::ios::binary);
                if (!file) {
                    err << "error: cannot open --out " << sweep_out << '\n';
                    return kExitIo;
                }
            }
            const std::vector<SweepRow> rows = run_sweep(sweep, worker_count());
            std::ostream &sink = sweep_out.empty() ? out : file;
            if (sweep_format == "json") {
                write_json(sink, sweep, rows);
            } else {
                write_csv(sink, sweep, rows);
            }
            sink.flush();
            if (!sink) {
                err << "error: write failed for " << (sweep_out.empty() ? "stdout" : sweep_out)
                    << '\n';
                return kExitIo;
            }
            return kExitOk;
        }
        return run_example(example_name, out, err);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::InvalidArgument ||
                       e.code() == ErrorCode::DimensionTooSmall
                   ? kExitUsage
                   : kExitFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace qsrm::cli
