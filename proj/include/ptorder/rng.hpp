#pragma once

#include <cstdint>

namespace ptorder {

/// SplitMix64 generator. Verification suites draw every sample from
/// Rng::stream(seed, index), so partitioning a run across workers reproduces
/// the same per-sample values. No std:: distributions are used anywhere;
/// output is identical across platforms.
class Rng {
public:
	explicit Rng(std::uint64_t seed) : state_(seed) {}

	static Rng stream(std::uint64_t seed, std::uint64_t index)
	{
		return Rng(mix(seed) ^ mix(0x632be59bd9b4e019ULL * (index + 1)));
	}

	std::uint64_t next()
	{
		state_ += 0x9e3779b97f4a7c15ULL;
		return mix(state_);
	}

	/// Uniform in [0, bound); bound must be positive.
	std::uint64_t below(std::uint64_t bound)
	{
		std::uint64_t threshold = (0 - bound) % bound;
		for (;;)
		{
			std::uint64_t r = next();
			if (r >= threshold)
				return r % bound;
		}
	}

	/// Uniform in [lo, hi], inclusive.
	std::int64_t range(std::int64_t lo, std::int64_t hi)
	{
		return lo + static_cast<std::int64_t>(
		                below(static_cast<std::uint64_t>(hi - lo + 1)));
	}

	/// True with probability num/den.
	bool chance(std::uint64_t num, std::uint64_t den)
	{
		return below(den) < num;
	}

private:
	static std::uint64_t mix(std::uint64_t z)
	{
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
		return z ^ (z >> 31);
	}

	std::uint64_t state_;
};

} // namespace ptorder
