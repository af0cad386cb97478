#ifndef BEACHCOMB_GENERATORS_HPP
#define BEACHCOMB_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "beachcomb/analysis.hpp"
#include "beachcomb/model.hpp"

// Seeded instance generators for benchmarks and sweeps. Uniform doubles
// are produced from the top 53 bits of mt19937_64 outputs, so identical
// seeds give identical instances on any conforming platform.

namespace beachcomb {

inline const char* rng_id() { return "mt19937_64-u53"; }

class Rng {
public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

	double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

	double log_uniform(double lo, double hi)
	{
		return std::exp(uniform(std::log(lo), std::log(hi)));
	}

	/// Uniform integer in [1, n].
	int uniform_count(int n)
	{
		const int value = 1 + static_cast<int>(uniform01() * n);
		return std::min(value, n);
	}

private:
	std::mt19937_64 engine_;
};

/// splitmix64 of (seed, index): derives independent per-instance seeds so
/// sweep entries do not depend on evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
	std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
	z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
	z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
	return z ^ (z >> 31);
}

struct Generator_spec {
	enum class Kind { random, w_uniform, totally_uniform, prop1 };

	Kind kind = Kind::random;
	int n = 4;
	std::uint64_t seed = 0;
	double length = 1.0;
	double epsilon = 0.5;     // prop1 family parameter
	double alpha = 0.5;       // totally-uniform common search speed (walk speed 1)
	double walk = 1.0;        // w-uniform common walk speed
	double walk_min = 1e-2;   // random kind: log-uniform walk speed range
	double walk_max = 1e2;
	// random and w-uniform kinds: search speed drawn uniformly from
	// (margin * w, (1 - margin) * w), keeping 1/s - 1/w well conditioned.
	double margin = 1e-6;
};

inline Instance generate(const Generator_spec& spec)
{
	if (spec.kind != Generator_spec::Kind::prop1 && spec.n < 1)
		throw Error(Errc::usage_error,
		            "generated fleets need at least one robot, got " + std::to_string(spec.n));

	Rng rng(spec.seed);
	Instance inst;
	inst.length = spec.length;
	switch (spec.kind) {
	case Generator_spec::Kind::random:
		for (int i = 0; i < spec.n; ++i) {
			const double walk = rng.log_uniform(spec.walk_min, spec.walk_max);
			const double search = walk * rng.uniform(spec.margin, 1.0 - spec.margin);
			inst.robots.push_back({"r" + std::to_string(i + 1), search, walk});
		}
		break;
	case Generator_spec::Kind::w_uniform:
		for (int i = 0; i < spec.n; ++i) {
			const double search = spec.walk * rng.uniform(spec.margin, 1.0 - spec.margin);
			inst.robots.push_back({"r" + std::to_string(i + 1), search, spec.walk});
		}
		break;
	case Generator_spec::Kind::totally_uniform:
		if (!(spec.alpha > 0.0 && spec.alpha < 1.0))
			throw Error(Errc::alpha_out_of_range,
			            "alpha must lie strictly between 0 and 1, got " + format_real(spec.alpha));
		for (int i = 0; i < spec.n; ++i)
			inst.robots.push_back({"r" + std::to_string(i + 1), spec.alpha, 1.0});
		break;
	case Generator_spec::Kind::prop1:
		inst = prop1_instance(spec.epsilon);
		inst.length = spec.length;
		break;
	}
	return validate_instance(std::move(inst));
}

}  // namespace beachcomb

#endif
