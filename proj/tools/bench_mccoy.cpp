// Benchmark comparing the OpenMP pair-enumeration kernel against itself at
// one thread and against the serial SkewSeries reference implementation.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgps/mccoy.hpp"

using namespace sgps;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct BenchCase {
    std::string ring_spec;
    std::string monoid_spec;
    std::string action;  // "id" or endo index
    int degree;
};

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t budget = 200'000'000;
    if (argc > 1) budget = std::stoull(argv[1]);

    std::vector<BenchCase> cases = {
        {"zmod 4", "N", "id", 3},
        {"zmod 6", "N", "id", 3},
        {"zmod 8", "N", "id", 2},
        {"gf 4", "N", "e1", 3},
        {"gf 4", "Z", "e1", 1},
        {"uppertri 2 zmod2", "N", "id", 2},
    };

    int max_threads = 1;
#ifdef _OPENMP
    max_threads = omp_get_max_threads();
#endif
    std::printf("mccoy pair-enumeration kernel, %d thread(s) available\n", max_threads);
    std::printf("%-28s %12s %10s %10s %10s %8s %s\n", "instance", "pairs", "ref ms",
                "1-thr ms", "par ms", "speedup", "agree");

    for (const auto& c : cases) {
        FiniteRing ring = build_ring(c.ring_spec);
        OrderedMonoid monoid = OrderedMonoid::parse(c.monoid_spec);
        Endomorphism endo = identity_endo(ring);
        if (c.action != "id") {
            for (const auto& e : enumerate_endomorphisms(ring))
                if (e.name == c.action) endo = e;
        }
        MonoidAction action(ring, monoid, {endo});
        Window w = Window::degree_range(monoid, monoid.is_group() ? -c.degree : 0, c.degree);

        SearchParams serial, parallel;
        serial.threads = 1;
        serial.budget = budget;
        parallel.threads = max_threads;
        parallel.budget = budget;

        auto t0 = std::chrono::steady_clock::now();
        McCoyVerdict v1 = mccoy_search(action, w, SeriesSide::right, serial);
        double serial_ms = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        McCoyVerdict vp = mccoy_search(action, w, SeriesSide::right, parallel);
        double par_ms = ms_since(t0);

        double ref_ms = -1;
        bool agree = v1.outcome == vp.outcome && v1.zero_divisor_pairs == vp.zero_divisor_pairs;
        if (v1.pairs_examined <= 300'000) {
            t0 = std::chrono::steady_clock::now();
            McCoyVerdict vr = mccoy_search_reference(action, w, SeriesSide::right, serial);
            ref_ms = ms_since(t0);
            agree = agree && vr.outcome == v1.outcome &&
                    vr.zero_divisor_pairs == v1.zero_divisor_pairs;
        }

        std::string name = c.ring_spec + " " + c.monoid_spec + " d=" + std::to_string(c.degree);
        if (ref_ms >= 0)
            std::printf("%-28s %12llu %10.1f %10.1f %10.1f %7.2fx %s\n", name.c_str(),
                        (unsigned long long)v1.pairs_examined, ref_ms, serial_ms, par_ms,
                        serial_ms / par_ms, agree ? "yes" : "NO");
        else
            std::printf("%-28s %12llu %10s %10.1f %10.1f %7.2fx %s\n", name.c_str(),
                        (unsigned long long)v1.pairs_examined, "-", serial_ms, par_ms,
                        serial_ms / par_ms, agree ? "yes" : "NO");
        if (!agree) return 1;
    }
    return 0;
}
