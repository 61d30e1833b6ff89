#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace polignac {

/// Splits [first, last] into `workers` contiguous chunks, runs `fn(lo, hi)`
/// on each (inclusive bounds) and returns the chunk results in range order,
/// so the merged output never depends on scheduling. The first exception
/// thrown by any chunk (in range order) is rethrown.
template <typename Result>
std::vector<Result> parallel_chunks(std::uint64_t first, std::uint64_t last, unsigned workers,
                                    const std::function<Result(std::uint64_t, std::uint64_t)> &fn)
{
	std::vector<Result> out;
	if (first > last)
		return out;
	std::uint64_t span = last - first + 1;
	std::uint64_t chunks = std::clamp<std::uint64_t>(workers, 1, span);
	out.resize(chunks);
	std::vector<std::exception_ptr> errors(chunks);

	auto run = [&](std::uint64_t c) {
		std::uint64_t lo = first + span * c / chunks;
		std::uint64_t hi = first + span * (c + 1) / chunks - 1;
		try {
			out[c] = fn(lo, hi);
		} catch (...) {
			errors[c] = std::current_exception();
		}
	};

	if (chunks == 1) {
		run(0);
	} else {
		std::vector<std::jthread> pool;
		pool.reserve(chunks);
		for (std::uint64_t c = 0; c < chunks; ++c)
			pool.emplace_back(run, c);
	}
	for (auto &e : errors)
		if (e)
			std::rethrow_exception(e);
	return out;
}

/// Concatenates per-chunk vectors produced by parallel_chunks.
template <typename T>
std::vector<T> flatten(std::vector<std::vector<T>> parts)
{
	std::vector<T> out;
	for (auto &p : parts)
		out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
	return out;
}

} // namespace polignac
