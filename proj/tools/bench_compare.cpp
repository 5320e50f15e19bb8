#include <chrono>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "trimult/nonsquare.hpp"
#include "trimult/oracle.hpp"
#include "trimult/threads.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel comparison"};
    long tmax = 200000;
    long kmax = 102;
    long k = 7;
    app.add_option("--k", k, "multiplier for the oracle scan");
    app.add_option("--tmax", tmax, "oracle scan upper bound on t");
    app.add_option("--kmax", kmax, "rank table upper bound on k");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", trimult::worker_threads());

    auto start = clock_type::now();
    const auto serial_scan = trimult::brute_force_serial(k, tmax);
    const double t_scan_serial = seconds_since(start);

    start = clock_type::now();
    const auto parallel_scan = trimult::brute_force(k, tmax);
    const double t_scan_parallel = seconds_since(start);

    if (serial_scan.pairs != parallel_scan.pairs) {
        std::printf("oracle kernels disagree for k=%ld, tmax=%ld\n", k, tmax);
        return 1;
    }
    std::printf("oracle k=%ld t<=%ld: serial %.3fs, parallel %.3fs, %zu hits, speedup %.2fx\n",
                k, tmax, t_scan_serial, t_scan_parallel, serial_scan.pairs.size(),
                t_scan_parallel > 0 ? t_scan_serial / t_scan_parallel : 0.0);

    start = clock_type::now();
    const auto serial_table = trimult::rank_table_serial(2, kmax);
    const double t_rank_serial = seconds_since(start);

    start = clock_type::now();
    const auto parallel_table = trimult::rank_table(2, kmax);
    const double t_rank_parallel = seconds_since(start);

    if (serial_table.size() != parallel_table.size()) {
        std::printf("rank tables disagree in size for kmax=%ld\n", kmax);
        return 1;
    }
    for (std::size_t i = 0; i < serial_table.size(); ++i) {
        const auto& a = serial_table[i];
        const auto& b = parallel_table[i];
        const bool same = a.k == b.k && a.profile.has_value() == b.profile.has_value() &&
                          (!a.profile || (a.profile->rank == b.profile->rank &&
                                          a.profile->kappa == b.profile->kappa &&
                                          a.profile->gamma == b.profile->gamma));
        if (!same) {
            std::printf("rank tables disagree at k=%s\n", a.k.get_str().c_str());
            return 1;
        }
    }
    std::printf("rank k<=%ld: serial %.3fs, parallel %.3fs, %zu rows, speedup %.2fx\n",
                kmax, t_rank_serial, t_rank_parallel, serial_table.size(),
                t_rank_parallel > 0 ? t_rank_serial / t_rank_parallel : 0.0);
    return 0;
}
