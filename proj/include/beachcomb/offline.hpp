#ifndef BEACHCOMB_OFFLINE_HPP
#define BEACHCOMB_OFFLINE_HPP

#include <cassert>
#include <span>
#include <utility>

#include "beachcomb/model.hpp"

// Optimal offline solver for a known segment length. Robots are sorted by
// walking speed; each one walks past the subintervals of its predecessors
// at full walking speed and then searches its own subinterval at full
// searching speed, so that everybody finishes at the same moment.

namespace beachcomb {

struct Offline_solution {
	std::vector<std::size_t> order;  // canonical offline order (instance indices)
	std::vector<double> lengths;     // search interval per robot, aligned with `order`
	double optimal_time = 0.0;
	double optimal_speed = 0.0;
	Schedule schedule;
};

/// Length each robot searches within one unit of time, robots already in
/// canonical offline order. y_1 = s_1 and
///   y_k = (s_k/w_k) * ((w_{k-1}/s_{k-1} - 1) * y_{k-1} + (w_k - w_{k-1}))
/// for k >= 2: robot k spends part of the unit walking past the growing
/// prefix and the rest searching.
inline std::vector<double> unit_search_lengths(std::span<const Robot> ordered)
{
	std::vector<double> lengths;
	lengths.reserve(ordered.size());
	for (std::size_t k = 0; k < ordered.size(); ++k) {
		const Robot& r = ordered[k];
		if (k == 0) {
			lengths.push_back(r.search_speed);
			continue;
		}
		const Robot& prev = ordered[k - 1];
		assert(prev.walk_speed <= r.walk_speed && "robots must be in canonical offline order");
		const double carried = (prev.walk_speed / prev.search_speed - 1.0) * lengths[k - 1];
		lengths.push_back(r.search_speed / r.walk_speed *
		                  (carried + (r.walk_speed - prev.walk_speed)));
	}
	return lengths;
}

/// Same lengths through the closed form
///   y_k = s_k - (s_k/w_k) * sum_{r<k} s_r * prod_{r<j<k} (1 - s_j/w_j),
/// evaluated literally in O(n^2). Kept as an independent algebraic route
/// for consistency tests.
inline std::vector<double> closed_form_unit_lengths(std::span<const Robot> ordered)
{
	std::vector<double> lengths;
	lengths.reserve(ordered.size());
	for (std::size_t k = 0; k < ordered.size(); ++k) {
		double walked = 0.0;
		for (std::size_t r = 0; r < k; ++r) {
			double survived = ordered[r].search_speed;
			for (std::size_t j = r + 1; j < k; ++j)
				survived *= 1.0 - ordered[j].search_speed / ordered[j].walk_speed;
			walked += survived;
		}
		const Robot& robot = ordered[k];
		lengths.push_back(robot.search_speed -
		                  robot.search_speed / robot.walk_speed * walked);
	}
	return lengths;
}

/// Search power of a robot set: the speed of the optimal offline schedule
/// on a unit segment. Sorts a copy by non-decreasing walking speed and
/// evaluates sum_k s_k * prod_{j>k} (1 - s_j/w_j).
inline double search_power(std::span<const Robot> robots)
{
	if (robots.empty())
		throw Error(Errc::empty_fleet, "search power of an empty robot set is undefined");
	std::vector<Robot> sorted(robots.begin(), robots.end());
	std::stable_sort(sorted.begin(), sorted.end(), [](const Robot& a, const Robot& b) {
		if (a.walk_speed != b.walk_speed)
			return a.walk_speed < b.walk_speed;
		return a.search_speed < b.search_speed;
	});
	double power = 0.0;
	double remaining = 1.0;  // prod over later robots of (1 - s/w)
	for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
		power += it->search_speed * remaining;
		remaining *= 1.0 - it->search_speed / it->walk_speed;
	}
	return power;
}

inline double search_power(const Instance& inst)
{
	return search_power(std::span<const Robot>(inst.robots));
}

/// Optimal schedule speed when every robot shares one walking speed:
///   w * (1 - prod_i (1 - s_i/w)).
/// Speeds scale linearly under uniform rescaling, so the w = 1 formula is
/// applied to the fleet scaled by 1/w and the result scaled back.
inline double wuniform_speed(std::span<const double> search_speeds, double walk_speed)
{
	if (search_speeds.empty())
		throw Error(Errc::empty_fleet, "w-uniform speed of an empty fleet is undefined");
	if (!std::isfinite(walk_speed) || walk_speed <= 0.0)
		throw Error(Errc::non_positive_speed,
		            "walk_speed must be a positive finite real, got " + format_real(walk_speed));
	double remaining = 1.0;
	for (double s : search_speeds) {
		if (!(s > 0.0) || !(s < walk_speed))
			throw Error(Errc::speed_out_of_range,
			            "search speed " + format_real(s) +
			            " must lie strictly between 0 and the walk speed " +
			            format_real(walk_speed));
		remaining *= 1.0 - s / walk_speed;
	}
	return walk_speed * (1.0 - remaining);
}

/// The optimal offline schedule: each robot walks the subintervals of all
/// slower walkers at full walking speed, then searches its own subinterval
/// at full searching speed. All robots finish simultaneously at
/// optimal_time = length / search_power.
inline Offline_solution comb_schedule(const Instance& inst)
{
	ensure_valid_instance(inst);

	Offline_solution sol;
	sol.order = canonical_offline_order(inst);

	std::vector<Robot> ordered;
	ordered.reserve(sol.order.size());
	for (std::size_t idx : sol.order)
		ordered.push_back(inst.robots[idx]);

	const std::vector<double> unit = unit_search_lengths(ordered);
	const double unit_total = std::accumulate(unit.begin(), unit.end(), 0.0);

	sol.optimal_speed = search_power(std::span<const Robot>(ordered));
	sol.optimal_time = inst.length / sol.optimal_speed;

	sol.lengths.reserve(unit.size());
	for (double y : unit)
		sol.lengths.push_back(inst.length * y / unit_total);

	// prefix[i] = left endpoint of the subinterval searched by slot i;
	// shared between neighbours so adjacent phases meet exactly.
	std::vector<double> prefix(unit.size() + 1, 0.0);
	for (std::size_t i = 0; i < unit.size(); ++i)
		prefix[i + 1] = prefix[i] + sol.lengths[i];

	sol.schedule.robot_phases.resize(inst.robots.size());
	sol.schedule.finishing_time = sol.optimal_time;
	for (std::size_t i = 0; i < ordered.size(); ++i) {
		const Robot& r = ordered[i];
		auto& phases = sol.schedule.robot_phases[sol.order[i]];
		double t = 0.0;
		if (prefix[i] > 0.0) {
			const double walk_end = prefix[i] / r.walk_speed;
			phases.push_back({Phase_mode::walk, 0.0, walk_end, 0.0, prefix[i]});
			t = walk_end;
		}
		phases.push_back({Phase_mode::search, t, t + sol.lengths[i] / r.search_speed,
		                  prefix[i], prefix[i + 1]});
	}
	return sol;
}

}  // namespace beachcomb

#endif
