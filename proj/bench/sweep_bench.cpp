// Serial reference kernels against their OpenMP counterparts.
#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "zdinf/ar.hpp"
#include "zdinf/sweep.hpp"

using namespace zdinf;

namespace {

double seconds(const std::function<void()>& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-34s serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
    const FieldSpec q;
    std::printf("threads: %d\n", omp_get_max_threads());
    const auto labels = catalog(CatalogSpec{4, 4, -3, 3});

    bool same = true;
    SerreSweep a, b;
    const double s1 = seconds([&] { a = serre_sweep(q, labels, Schedule::Serial); });
    const double p1 = seconds([&] { b = serre_sweep(q, labels, Schedule::Parallel); });
    same = same && a.failures == b.failures && a.pairs.size() == b.pairs.size();
    report("serre sweep (70 objects)", s1, p1);

    std::vector<std::vector<std::size_t>> h1, h2;
    const double s2 = seconds([&] { h1 = hom_dim_table(q, labels, Schedule::Serial); });
    const double p2 = seconds([&] { h2 = hom_dim_table(q, labels, Schedule::Parallel); });
    same = same && h1 == h2;
    report("hom dimension table", s2, p2);

    QuiverWindow w1, w2;
    const double s3 = seconds([&] { w1 = quiver_window(q, 6, -3, 5, 6, false); });
    const double p3 = seconds([&] { w2 = quiver_window(q, 6, -3, 5, 6, true); });
    same = same && w1.arrows == w2.arrows && w1.translation == w2.translation;
    report("quiver window m<=6, a in [-3,5]", s3, p3);

    std::printf("results identical: %s\n", same ? "yes" : "no");
    return same ? 0 : 1;
}
