#ifndef BEACHCOMB_ORACLE_HPP
#define BEACHCOMB_ORACLE_HPP

#include <span>

#include "beachcomb/model.hpp"
#include "beachcomb/analysis.hpp"

// Brute-force certification helpers: exhaustive permutation search over
// spatial robot orders and exhaustive grid search over w-uniform speed
// profiles. Deliberately implemented from the defining formulas, sharing
// no code with the solvers they certify.

namespace beachcomb {

struct Ordering_result {
	std::vector<std::size_t> permutation;
	double speed = 0.0;
};

struct Grid_max {
	std::vector<double> argmax;
	double value = 0.0;
};

inline void ensure_permutation(std::size_t n, std::span<const std::size_t> perm)
{
	if (perm.size() != n)
		throw Error(Errc::invalid_permutation,
		            "permutation has " + std::to_string(perm.size()) +
		            " entries for " + std::to_string(n) + " robots");
	std::vector<bool> seen(n, false);
	for (std::size_t idx : perm) {
		if (idx >= n || seen[idx])
			throw Error(Errc::invalid_permutation,
			            "permutation is not a bijection over robot indices");
		seen[idx] = true;
	}
}

/// Schedule speed achievable when robots search contiguous subintervals in
/// exactly the given spatial order, all finishing simultaneously:
///   sum_k s_{p(k)} * prod_{j>k} (1 - s_{p(j)}/w_{p(j)}).
/// No sorting: the permutation is taken as given.
inline double ordered_search_power(std::span<const Robot> robots,
                                   std::span<const std::size_t> perm)
{
	ensure_permutation(robots.size(), perm);
	double power = 0.0;
	double remaining = 1.0;
	for (auto it = perm.rbegin(); it != perm.rend(); ++it) {
		const Robot& r = robots[*it];
		power += r.search_speed * remaining;
		remaining *= 1.0 - r.search_speed / r.walk_speed;
	}
	return power;
}

/// The per-unit-time subinterval lengths realizing a given spatial order
/// with a common finish time (same recurrence as the solver, applied to an
/// arbitrary order). For bad orders some lengths can come out non-positive,
/// meaning that order admits no schedule utilizing every robot.
inline std::vector<double> ordered_unit_lengths(std::span<const Robot> robots,
                                                std::span<const std::size_t> perm)
{
	ensure_permutation(robots.size(), perm);
	std::vector<double> lengths;
	lengths.reserve(perm.size());
	for (std::size_t k = 0; k < perm.size(); ++k) {
		const Robot& r = robots[perm[k]];
		if (k == 0) {
			lengths.push_back(r.search_speed);
			continue;
		}
		const Robot& prev = robots[perm[k - 1]];
		const double carried = (prev.walk_speed / prev.search_speed - 1.0) * lengths[k - 1];
		lengths.push_back(r.search_speed / r.walk_speed *
		                  (carried + (r.walk_speed - prev.walk_speed)));
	}
	return lengths;
}

/// Walk-then-search schedule for an explicit spatial order and explicit
/// subinterval lengths; finishing time is the latest per-robot finish.
/// Used to materialize oracle orders and perturbed partitions as real
/// schedules the verifier can inspect.
inline Schedule schedule_from_lengths(const Instance& inst,
                                      std::span<const std::size_t> order,
                                      std::span<const double> lengths)
{
	ensure_valid_instance(inst);
	ensure_permutation(inst.robots.size(), order);
	if (lengths.size() != order.size())
		throw Error(Errc::invalid_permutation, "one subinterval length per robot is required");

	std::vector<double> prefix(order.size() + 1, 0.0);
	for (std::size_t i = 0; i < order.size(); ++i) {
		if (!(lengths[i] > 0.0))
			throw Error(Errc::invalid_permutation,
			            "subinterval lengths must be positive, got " + format_real(lengths[i]));
		prefix[i + 1] = prefix[i] + lengths[i];
	}

	Schedule sched;
	sched.robot_phases.resize(inst.robots.size());
	for (std::size_t i = 0; i < order.size(); ++i) {
		const Robot& r = inst.robots[order[i]];
		auto& phases = sched.robot_phases[order[i]];
		double t = 0.0;
		if (prefix[i] > 0.0) {
			t = prefix[i] / r.walk_speed;
			phases.push_back({Phase_mode::walk, 0.0, t, 0.0, prefix[i]});
		}
		const double finish = t + lengths[i] / r.search_speed;
		phases.push_back({Phase_mode::search, t, finish, prefix[i], prefix[i + 1]});
		sched.finishing_time = std::max(sched.finishing_time, finish);
	}
	return sched;
}

/// Enumerates all n! spatial orders (lexicographically, n <= 9) and returns
/// the fastest; the first maximum encountered is kept, so results are
/// reproducible.
inline Ordering_result best_order_bruteforce(std::span<const Robot> robots)
{
	if (robots.empty())
		throw Error(Errc::empty_fleet, "cannot order an empty fleet");
	if (robots.size() > 9)
		throw Error(Errc::fleet_too_large,
		            "exhaustive ordering is limited to 9 robots, got " +
		            std::to_string(robots.size()));
	std::vector<std::size_t> perm(robots.size());
	std::iota(perm.begin(), perm.end(), std::size_t{0});
	Ordering_result best{perm, ordered_search_power(robots, perm)};
	while (std::next_permutation(perm.begin(), perm.end())) {
		const double speed = ordered_search_power(robots, perm);
		if (speed > best.speed)
			best = {perm, speed};
	}
	return best;
}

/// Exhaustive grid maximization of the w-uniform ratio bound over
/// (step, 1-step)^n for n in {2, 3}. The first maximum in lexicographic
/// grid order is kept.
inline Grid_max grid_max_wuniform(int n, double step)
{
	if (n != 2 && n != 3)
		throw Error(Errc::usage_error, "grid search supports n = 2 or 3, got " + std::to_string(n));
	if (!(step >= 1e-3 && step <= 0.1))
		throw Error(Errc::usage_error,
		            "grid step must lie in [1e-3, 0.1], got " + format_real(step));

	const int cells = static_cast<int>(std::floor(1.0 / step + 0.5)) - 1;
	Grid_max best;
	best.value = -1.0;
	std::vector<double> point(static_cast<std::size_t>(n), 0.0);
	if (n == 2) {
		for (int i = 1; i <= cells; ++i) {
			point[0] = i * step;
			for (int j = 1; j <= cells; ++j) {
				point[1] = j * step;
				const double value = wuniform_ratio_bound(point);
				if (value > best.value)
					best = {point, value};
			}
		}
	} else {
		for (int i = 1; i <= cells; ++i) {
			point[0] = i * step;
			for (int j = 1; j <= cells; ++j) {
				point[1] = j * step;
				for (int k = 1; k <= cells; ++k) {
					point[2] = k * step;
					const double value = wuniform_ratio_bound(point);
					if (value > best.value)
						best = {point, value};
				}
			}
		}
	}
	return best;
}

}  // namespace beachcomb

#endif
