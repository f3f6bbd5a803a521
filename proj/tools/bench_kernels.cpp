// Times the graded-piece kernels with the serial reference path (workers=1)
// against the OpenMP path (workers=0, all threads) on a mid-size fixture and
// checks that both produce identical values.  Each measurement builds a fresh
// context so the piece cache starts cold.
#include <chrono>
#include <iomanip>
#include <iostream>

#include "reesmult/parallel.hpp"
#include "reesmult/rees_graded.hpp"

using namespace reesmult;

namespace {

struct Sample {
    double millis;
    Int value;
};

template <typename Fn>
Sample timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Int v = fn();
    auto t1 = std::chrono::steady_clock::now();
    return {std::chrono::duration<double, std::milli>(t1 - t0).count(), v};
}

std::vector<MonomialIdeal> fixture() {
    auto r = make_ring({"x", "y"});
    return {power(max_ideal(r), 2), parse_ideal(r, {"x", "y^2"})};
}

Sample quotient_workload(int workers) {
    return timed([&] {
        auto rc = make_rees_context(ReesVariant::ExtendedRees, fixture());
        auto N = maximal_ideal(rc);
        ComputeOptions opt;
        opt.workers = workers;
        return graded_quotient_length(mg_power(N, 4), mg_power(N, 5), opt);
    });
}

Sample multiplicity_workload(int workers) {
    return timed([&] {
        auto rc = make_rees_context(ReesVariant::ExtendedRees, fixture());
        ComputeOptions opt;
        opt.workers = workers;
        return graded_multiplicity(maximal_ideal(rc), opt).value;
    });
}

int report(const char* name, Sample serial, Sample parallel) {
    std::cout << std::left << std::setw(22) << name << std::right << std::fixed
              << std::setprecision(1) << std::setw(9) << serial.millis << " ms"
              << std::setw(9) << parallel.millis << " ms" << std::setw(8)
              << std::setprecision(2) << serial.millis / parallel.millis << "x   value "
              << serial.value << "\n";
    if (serial.value != parallel.value) {
        std::cout << "MISMATCH: parallel value " << parallel.value << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main() {
    std::cout << "threads: " << resolve_workers(0) << "\n";
    std::cout << std::left << std::setw(22) << "workload" << std::right << std::setw(12)
              << "serial" << std::setw(12) << "openmp" << std::setw(9) << "speedup"
              << "\n";
    int rc = 0;
    rc |= report("graded quotient r=4", quotient_workload(1), quotient_workload(0));
    rc |= report("multiplicity fit", multiplicity_workload(1), multiplicity_workload(0));
    return rc;
}
