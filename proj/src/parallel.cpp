#include "rs/parallel.hpp"

namespace rs {

int& max_threads() {
    static int cap = []() {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }();
    return cap;
}

void parallel_chunks(int64_t n, const std::function<void(int, int64_t, int64_t)>& fn) {
    if (n <= 0) return;
    int workers = static_cast<int>(std::max<int64_t>(1, std::min<int64_t>(max_threads(), n)));
    if (workers == 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    int64_t base = n / workers, rem = n % workers, begin = 0;
    for (int w = 0; w < workers; ++w) {
        int64_t len = base + (w < rem ? 1 : 0);
        int64_t end = begin + len;
        pool.emplace_back(fn, w, begin, end);
        begin = end;
    }
    for (auto& t : pool) t.join();
}

double parallel_sum(int64_t n, const std::function<double(int64_t)>& fn) {
    int workers = static_cast<int>(
        std::max<int64_t>(1, std::min<int64_t>(max_threads(), std::max<int64_t>(n, 1))));
    std::vector<double> partial(workers, 0.0);
    parallel_chunks(n, [&](int w, int64_t b, int64_t e) {
        double acc = 0.0, comp = 0.0;
        for (int64_t i = b; i < e; ++i) {
            double y = fn(i) - comp;
            double t = acc + y;
            comp = (t - acc) - y;
            acc = t;
        }
        partial[w] = acc;
    });
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

} // namespace rs
