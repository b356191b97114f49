#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <type_traits>
#include <vector>

namespace trusslab {

/// Splits [0, total) into at most `jobs` contiguous chunks, evaluates
/// fn(begin, end) per chunk (on worker threads when jobs > 1), and returns
/// the per-chunk results in chunk order. Merging in chunk order keeps
/// parallel and serial runs byte-identical downstream.
template <typename Fn>
auto run_chunked(std::uint64_t total, int jobs, Fn&& fn) {
    using R = std::invoke_result_t<Fn&, std::uint64_t, std::uint64_t>;
    static_assert(!std::is_same_v<R, bool>, "chunk results must not be bool (vector<bool> is not thread-safe)");
    if (jobs < 1) jobs = 1;
    const std::uint64_t chunks = std::max<std::uint64_t>(
        1, std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total == 0 ? 1 : total));
    std::vector<R> results(chunks);
    if (chunks == 1) {
        results[0] = fn(0, total);
        return results;
    }
    const std::uint64_t per = total / chunks, rem = total % chunks;
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    std::uint64_t begin = 0;
    for (std::uint64_t i = 0; i < chunks; ++i) {
        const std::uint64_t len = per + (i < rem ? 1 : 0);
        const std::uint64_t b = begin, e = begin + len;
        begin = e;
        workers.emplace_back([&results, i, b, e, &fn] { results[i] = fn(b, e); });
    }
    for (auto& w : workers) w.join();
    return results;
}

}  // namespace trusslab
