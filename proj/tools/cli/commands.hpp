#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qsrm/constellation.hpp"
#include "qsrm/hermitian.hpp"
#include "qsrm/srm.hpp"

namespace qsrm::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitIo = 3,
    kExitGoldenMiss = 4,
};

struct PointSpec {
    Modulation modulation = Modulation::psk(4);
    double ns = 1.0;
    double noise = 0.0;
    double epsilon = 1e-5;
    double nu = 1e-5;
    int dimension = 0;  // 0 derives n from epsilon
    ErrorMetric metric = ErrorMetric::MaxAbs;
    Route route = Route::Auto;
};

// PSK goes through the GUS route, everything else through the general one.
DetectionResult compute_point(const PointSpec &spec);

struct SweepSpec {
    Modulation modulation = Modulation::psk(4);
    std::vector<double> ns_grid;
    std::vector<double> noise_list;
    double epsilon = 1e-5;
    double nu = 1e-5;
    bool homodyne = true;
    bool helstrom = true;  // only used for binary constellations
};

struct SweepRow {
    double ns = 0.0;
    double noise = 0.0;
    int n_dim = 0;
    double pe_srm = 0.0;
    std::optional<double> pe_homodyne;
    std::optional<double> pe_helstrom;
};

// Throws Error(InvalidArgument) naming the offending flag.
void validate(const SweepSpec &spec);

// Rows ordered by noise, then Ns. Independent of the worker count.
std::vector<SweepRow> run_sweep(const SweepSpec &spec, unsigned workers);

void write_csv(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRow> &rows);
void write_json(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRow> &rows);

// Worker cap from QSRM_THREADS, else the hardware concurrency.
unsigned worker_count();

// Prints the named worked example; returns kExitGoldenMiss on any miss.
int run_example(const std::string &name, std::ostream &out, std::ostream &err);

int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err);

}  // namespace qsrm::cli
