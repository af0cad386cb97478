#ifndef BEACHCOMB_VERIFY_HPP
#define BEACHCOMB_VERIFY_HPP

#include <limits>
#include <span>
#include <utility>

#include "beachcomb/model.hpp"

// Independent schedule validator. Works purely from the phases of a
// schedule (never from solver state): recomputes continuity, speed limits
// and coverage, and optionally checks the structural shape every optimal
// offline schedule can be brought into.

namespace beachcomb {

struct Speed_violation {
	std::size_t robot = 0;
	std::size_t phase = 0;
	double required = 0.0;  // speed the phase implies
	double allowed = 0.0;   // the robot's limit for that mode
};

struct Continuity_violation {
	std::size_t robot = 0;
	std::size_t phase = 0;
	std::string detail;
};

struct Validation_report {
	bool feasible = false;
	std::vector<std::pair<double, double>> coverage_gaps;  // merged, sorted
	std::vector<Speed_violation> speed_violations;
	std::vector<Continuity_violation> continuity_violations;
	double measured_finishing_time = 0.0;  // latest end of any walk/search phase
	double measured_speed = 0.0;           // length / measured_finishing_time
};

/// Structural shape of an optimal offline schedule: contiguous searched
/// subintervals, nobody idle and everybody finishing a search at the
/// common finishing time, every robot searching a non-empty subinterval,
/// and strictly slower walkers searching strictly closer to the start.
struct Structure_report {
	bool contiguous_search = false;
	bool no_idle_and_common_finish = false;
	bool all_utilized = false;
	bool walk_speed_ordered = false;
};

namespace detail {

inline void ensure_aligned(const Instance& inst, const Schedule& sched)
{
	if (sched.robot_phases.size() != inst.robots.size())
		throw Error(Errc::robot_mismatch,
		            "schedule describes " + std::to_string(sched.robot_phases.size()) +
		            " robots, instance has " + std::to_string(inst.robots.size()));
}

/// Sorted, merged position intervals searched by the given phases.
/// Intervals closer than `touch_tol` are considered touching.
inline std::vector<std::pair<double, double>> merged_search_intervals(
	std::span<const Phase> phases, double touch_tol)
{
	std::vector<std::pair<double, double>> intervals;
	for (const Phase& ph : phases) {
		if (ph.mode != Phase_mode::search)
			continue;
		const double lo = std::min(ph.x0, ph.x1);
		const double hi = std::max(ph.x0, ph.x1);
		if (hi > lo)
			intervals.emplace_back(lo, hi);
	}
	std::sort(intervals.begin(), intervals.end());
	std::vector<std::pair<double, double>> merged;
	for (const auto& iv : intervals) {
		if (!merged.empty() && iv.first <= merged.back().second + touch_tol)
			merged.back().second = std::max(merged.back().second, iv.second);
		else
			merged.push_back(iv);
	}
	return merged;
}

inline double latest_activity_end(const Schedule& sched)
{
	double finish = 0.0;
	for (const auto& phases : sched.robot_phases)
		for (const Phase& ph : phases)
			if (ph.mode != Phase_mode::idle)
				finish = std::max(finish, ph.t1);
	return finish;
}

}  // namespace detail

/// Robot position at time t, recomputed from the phases alone (piecewise
/// linear interpolation; clamps to the timeline's endpoints).
inline double position_at_time(std::span<const Phase> phases, double t)
{
	if (phases.empty())
		return 0.0;
	if (t <= phases.front().t0)
		return phases.front().x0;
	for (const Phase& ph : phases) {
		if (t <= ph.t1) {
			const double duration = ph.duration();
			if (duration <= 0.0)
				return ph.x1;
			const double fraction = (t - ph.t0) / duration;
			return ph.x0 + fraction * ph.displacement();
		}
	}
	return phases.back().x1;
}

/// Checks a schedule against the physical model: phase continuity from
/// (t, x) = (0, 0), per-mode speed limits, forward-moving searches, and
/// exact interval coverage of [0, length]. Gaps of any size beyond the
/// touching tolerance (1e-12 * length) are reported.
inline Validation_report validate(const Instance& inst, const Schedule& sched,
                                  double rel_tol = kRelTol)
{
	ensure_valid_instance(inst);
	detail::ensure_aligned(inst, sched);

	const double length = inst.length;
	const double pos_tol = std::max(kAbsTol, rel_tol * length);
	const double touch_tol = 1e-12 * length;

	Validation_report report;
	std::vector<std::pair<double, double>> searched;

	for (std::size_t ri = 0; ri < inst.robots.size(); ++ri) {
		const Robot& robot = inst.robots[ri];
		const auto& phases = sched.robot_phases[ri];
		if (phases.empty()) {
			report.continuity_violations.push_back({ri, 0, "robot has no phases"});
			continue;
		}
		if (std::fabs(phases.front().t0) > kAbsTol ||
		    std::fabs(phases.front().x0) > pos_tol)
			report.continuity_violations.push_back(
				{ri, 0, "first phase does not start at time 0, position 0"});

		for (std::size_t pi = 0; pi < phases.size(); ++pi) {
			const Phase& ph = phases[pi];
			if (ph.t1 < ph.t0 - kAbsTol)
				report.continuity_violations.push_back({ri, pi, "phase ends before it starts"});
			if (pi > 0) {
				const Phase& prev = phases[pi - 1];
				if (!approx_equal(prev.t1, ph.t0, rel_tol))
					report.continuity_violations.push_back({ri, pi, "time gap after previous phase"});
				if (!approx_equal(prev.x1, ph.x0, rel_tol, pos_tol))
					report.continuity_violations.push_back({ri, pi, "position jump after previous phase"});
			}
			if (ph.x0 < -pos_tol || ph.x0 > length + pos_tol ||
			    ph.x1 < -pos_tol || ph.x1 > length + pos_tol)
				report.continuity_violations.push_back({ri, pi, "position outside the segment"});

			const double duration = ph.duration();
			const double displacement = ph.displacement();
			if (ph.mode == Phase_mode::idle) {
				if (std::fabs(displacement) > pos_tol)
					report.speed_violations.push_back(
						{ri, pi, std::fabs(displacement) / std::max(duration, kAbsTol), 0.0});
				continue;
			}
			const double allowed = ph.mode == Phase_mode::walk ? robot.walk_speed
			                                                   : robot.search_speed;
			double required = 0.0;
			if (duration <= kAbsTol)
				required = std::fabs(displacement) <= pos_tol
					? 0.0
					: std::numeric_limits<double>::infinity();
			else
				required = std::fabs(displacement) / duration;
			if (required > allowed * (1.0 + rel_tol))
				report.speed_violations.push_back({ri, pi, required, allowed});

			if (ph.mode == Phase_mode::search) {
				if (displacement < -pos_tol) {
					report.continuity_violations.push_back({ri, pi, "search phase moves backwards"});
				} else {
					const double lo = std::max(ph.x0, 0.0);
					const double hi = std::min(ph.x1, length);
					if (hi > lo)
						searched.emplace_back(lo, hi);
				}
			}
		}
	}

	std::sort(searched.begin(), searched.end());
	double cursor = 0.0;
	for (const auto& iv : searched) {
		if (iv.first > cursor + touch_tol)
			report.coverage_gaps.emplace_back(cursor, iv.first);
		cursor = std::max(cursor, iv.second);
	}
	if (cursor < length - touch_tol)
		report.coverage_gaps.emplace_back(cursor, length);

	report.measured_finishing_time = detail::latest_activity_end(sched);
	report.measured_speed = report.measured_finishing_time > 0.0
		? length / report.measured_finishing_time
		: 0.0;
	report.feasible = report.coverage_gaps.empty() &&
	                  report.speed_violations.empty() &&
	                  report.continuity_violations.empty();
	return report;
}

/// Evaluates the four structural flags on a (feasible) schedule. A robot
/// counts as idle if any phase has idle mode, or if a phase moves slower
/// than 1e-9 of the allowed speed while the robot is not yet at its final
/// position.
inline Structure_report check_structure(const Instance& inst, const Schedule& sched,
                                        double rel_tol = kRelTol)
{
	ensure_valid_instance(inst);
	detail::ensure_aligned(inst, sched);

	const double length = inst.length;
	const double pos_tol = std::max(kAbsTol, rel_tol * length);
	const double touch_tol = 1e-12 * length;
	const double finish = detail::latest_activity_end(sched);

	Structure_report report{true, true, true, true};

	struct Extent {
		bool searched = false;
		double lo = 0.0;
		double hi = 0.0;
	};
	std::vector<Extent> extents(inst.robots.size());

	for (std::size_t ri = 0; ri < inst.robots.size(); ++ri) {
		const Robot& robot = inst.robots[ri];
		const auto& phases = sched.robot_phases[ri];
		if (phases.empty()) {
			report.no_idle_and_common_finish = false;
			report.all_utilized = false;
			continue;
		}

		const auto merged = detail::merged_search_intervals(phases, touch_tol);
		if (merged.size() > 1)
			report.contiguous_search = false;
		double searched_total = 0.0;
		for (const auto& iv : merged)
			searched_total += iv.second - iv.first;
		if (searched_total <= touch_tol)
			report.all_utilized = false;
		if (!merged.empty())
			extents[ri] = {true, merged.front().first, merged.back().second};

		const double final_pos = phases.back().x1;
		for (const Phase& ph : phases) {
			if (ph.mode == Phase_mode::idle) {
				report.no_idle_and_common_finish = false;
				break;
			}
			const double allowed = ph.mode == Phase_mode::walk ? robot.walk_speed
			                                                   : robot.search_speed;
			const double duration = ph.duration();
			const double speed = duration > kAbsTol
				? std::fabs(ph.displacement()) / duration
				: allowed;
			const bool at_final = std::fabs(ph.x0 - final_pos) <= pos_tol &&
			                      std::fabs(ph.x1 - final_pos) <= pos_tol;
			if (speed < 1e-9 * allowed && !at_final) {
				report.no_idle_and_common_finish = false;
				break;
			}
		}
		const Phase& last = phases.back();
		if (last.mode != Phase_mode::search || !approx_equal(last.t1, finish, rel_tol))
			report.no_idle_and_common_finish = false;
	}

	// Strictly slower walkers must search strictly closer to the start.
	// Robots are bucketed by walking speed (ties within tolerance share a
	// bucket and are unconstrained against each other).
	std::vector<std::size_t> order(inst.robots.size());
	std::iota(order.begin(), order.end(), std::size_t{0});
	std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
		return inst.robots[a].walk_speed < inst.robots[b].walk_speed;
	});
	double running_max = -std::numeric_limits<double>::infinity();
	std::size_t i = 0;
	while (i < order.size()) {
		std::size_t j = i;
		double group_lo = std::numeric_limits<double>::infinity();
		double group_hi = -std::numeric_limits<double>::infinity();
		while (j < order.size() &&
		       approx_equal(inst.robots[order[j]].walk_speed,
		                    inst.robots[order[i]].walk_speed, rel_tol)) {
			const Extent& e = extents[order[j]];
			if (e.searched) {
				group_lo = std::min(group_lo, e.lo);
				group_hi = std::max(group_hi, e.hi);
			}
			++j;
		}
		if (group_lo <= group_hi) {
			if (group_lo < running_max - pos_tol)
				report.walk_speed_ordered = false;
			running_max = std::max(running_max, group_hi);
		}
		i = j;
	}

	return report;
}

}  // namespace beachcomb

#endif
