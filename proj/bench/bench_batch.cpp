// Compares the serial reference path against the OpenMP batch path on a
// block of independent witness builds and checks the results agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "hyperfin/batch.hpp"
#include "hyperfin/json_io.hpp"

using namespace hyperfin;

namespace {

std::string build_digest(std::size_t i) {
    FunctionalWitnessResult r = functional_witness(random_functional_graph(400, 3, i));
    WitnessReport report = validate_witness(r.witness, true);
    if (!report.valid) {
        std::fprintf(stderr, "instance %zu invalid: %s\n", i, report.violation.c_str());
        std::exit(1);
    }
    return digest(witness_to_json(r.witness).dump());
}

double run_block(std::size_t count, unsigned jobs, std::vector<std::string>& out) {
    auto start = std::chrono::steady_clock::now();
    out = batch_map<std::string>(count, jobs, build_digest);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t count = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 64;
    unsigned jobs = argc > 2 ? (unsigned)std::strtoul(argv[2], nullptr, 10) : 4;

    std::vector<std::string> serial, parallel;
    double t_serial = run_block(count, 1, serial);
    double t_parallel = run_block(count, jobs, parallel);

    if (serial != parallel) {
        std::fprintf(stderr, "serial and parallel results differ\n");
        return 1;
    }
    std::printf("instances: %zu\nserial:   %.3f s\nparallel: %.3f s (jobs=%u)\nspeedup:  %.2fx\n",
                count, t_serial, t_parallel, jobs, t_serial / t_parallel);
    return 0;
}
