#pragma once

// Benchmark harness: factorized inverse (L^T M K, triangular structure)
// versus fraction-free elimination, with a correctness gate and integer
// bit-length statistics. Timing runs single-threaded.

#include "catbert/factorization.hpp"
#include "catbert/hankel.hpp"
#include "catbert/matrix.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>
#include <string>
#include <vector>

namespace catbert {

struct BenchRecord {
    std::string method;  // "factorized" or "elimination"
    GCParams params;
    long n = 0;
    double median_ms = 0.0;
    std::size_t max_numerator_bits = 0;
    long repetitions = 0;
};

namespace detail {

inline std::size_t max_numerator_bits(const ExactMatrix& m) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int num = m.at(i, j).num();
            if (num != 0)
                bits = std::max(bits, mpz_sizeinbase(num.get_mpz_t(), 2));
        }
    return bits;
}

template <typename F>
inline double median_time_ms(F&& run, long repetitions) {
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(repetitions));
    for (long r = 0; r < repetitions; ++r) {
        const auto start = std::chrono::steady_clock::now();
        run();
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    return times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2.0;
}

}  // namespace detail

/// Runs both methods for each n; asserts the two inverses identical before
/// timing (a mismatch throws with the differing entry). Records sorted by
/// (method, n).
inline std::vector<BenchRecord> run_bench(const GCParams& params,
                                          const std::vector<long>& n_list,
                                          long repetitions) {
    params.validate();
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    std::vector<BenchRecord> records;
    for (long n : n_list) {
        const ExactMatrix g = hankel_G(params, n);
        const ExactMatrix fast = inverse_via_LMK(params, n);
        const ExactMatrix slow = invert_oracle(g);
        if (fast != slow) {
            for (std::size_t i = 0; i < fast.rows(); ++i)
                for (std::size_t j = 0; j < fast.cols(); ++j)
                    if (fast.at(i, j) != slow.at(i, j))
                        throw std::logic_error(
                            "bench correctness gate failed at n=" + std::to_string(n) +
                            " entry (" + std::to_string(i) + "," + std::to_string(j) +
                            "): " + fast.at(i, j).str() + " vs " + slow.at(i, j).str());
        }

        BenchRecord fr{"factorized", params, n, 0.0, detail::max_numerator_bits(fast),
                       repetitions};
        fr.median_ms = detail::median_time_ms(
            [&] { volatile bool sink = inverse_via_LMK(params, n).rows() > 0; (void)sink; },
            repetitions);
        records.push_back(fr);

        BenchRecord er{"elimination", params, n, 0.0, detail::max_numerator_bits(slow),
                       repetitions};
        er.median_ms = detail::median_time_ms(
            [&] { volatile bool sink = invert_oracle(g).rows() > 0; (void)sink; },
            repetitions);
        records.push_back(er);
    }
    std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        return a.method != b.method ? a.method < b.method : a.n < b.n;
    });
    return records;
}

inline nlohmann::json bench_to_json(const std::vector<BenchRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
        arr.push_back({{"method", r.method},
                       {"params", r.params.to_json()},
                       {"n", r.n},
                       {"median_ms", r.median_ms},
                       {"max_numerator_bits", r.max_numerator_bits},
                       {"repetitions", r.repetitions}});
    return arr;
}

inline std::string bench_to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "method,p,q,a,n,median_ms,max_numerator_bits,repetitions\n";
    for (const auto& r : records)
        out << r.method << ',' << r.params.p << ',' << r.params.q << ',' << r.params.a << ','
            << r.n << ',' << r.median_ms << ',' << r.max_numerator_bits << ','
            << r.repetitions << '\n';
    return out.str();
}

}  // namespace catbert
