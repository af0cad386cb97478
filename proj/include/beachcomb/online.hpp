#ifndef BEACHCOMB_ONLINE_HPP
#define BEACHCOMB_ONLINE_HPP

#include <cmath>
#include <span>
#include <utility>

#include "beachcomb/model.hpp"

// Online solver for a segment of unknown length. The swarm robots repeat
// the same motion pattern on every unit segment and meet at every integer
// point simultaneously, so the schedule speed is the same for every
// integer horizon. Robots too slow to keep up with the swarm sit out.

namespace beachcomb {

struct Leapfrog_schedule {
	Swarm_plan plan;
	long long horizon = 0;     // number of unit segments covered
	Schedule schedule;         // covers [0, horizon]
	double unit_time = 0.0;    // 1 / swarm speed
};

/// Robot indices sorted by non-increasing walking speed; ties broken by
/// non-increasing searching speed, then input index. Admission into the
/// swarm is considered in this order.
inline std::vector<std::size_t> swarm_order(const Instance& inst)
{
	std::vector<std::size_t> order(inst.robots.size());
	std::iota(order.begin(), order.end(), std::size_t{0});
	std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
		const Robot& ra = inst.robots[a];
		const Robot& rb = inst.robots[b];
		if (ra.walk_speed != rb.walk_speed)
			return ra.walk_speed > rb.walk_speed;
		if (ra.search_speed != rb.search_speed)
			return ra.search_speed > rb.search_speed;
		return a < b;
	});
	return order;
}

/// Greedy swarm construction. Candidates are taken in non-increasing
/// walking speed; robot i is admitted only while the current swarm speed
/// is strictly below w_i (a robot whose walking speed ties the swarm
/// speed would contribute a zero-length slice, so ties are excluded).
/// Maintaining S = num/den with num += 1/slowdown_i and
/// den += 1/(w_i * slowdown_i) yields
///   S = (sum 1/slowdown_i) / (1 + sum 1/(w_i * slowdown_i))
/// over the admitted set, and each admission moves S strictly up while
/// keeping it below every admitted walking speed. The first rejection
/// ends the loop: later candidates walk no faster.
inline Swarm_plan swarm_speed(const Instance& inst)
{
	ensure_valid_instance(inst);
	const std::vector<std::size_t> order = swarm_order(inst);

	Swarm_plan plan;
	double num = 0.0;
	double den = 1.0;
	double speed = 0.0;
	std::size_t taken = 0;
	for (; taken < order.size(); ++taken) {
		const Robot& r = inst.robots[order[taken]];
		if (taken > 0 && (speed >= r.walk_speed || approx_equal(speed, r.walk_speed)))
			break;
		const double slowdown = r.slowdown();
		num += 1.0 / slowdown;
		den += 1.0 / (r.walk_speed * slowdown);
		speed = num / den;
		plan.swarm.push_back(order[taken]);
		plan.slowdowns.push_back(slowdown);
		plan.admission_speeds.push_back(speed);
	}
	plan.excluded.assign(order.begin() + taken, order.end());
	plan.swarm_speed = speed;

	plan.contributions.reserve(plan.swarm.size());
	for (std::size_t j = 0; j < plan.swarm.size(); ++j) {
		const Robot& r = inst.robots[plan.swarm[j]];
		double c = (1.0 / speed - 1.0 / r.walk_speed) / plan.slowdowns[j];
		if (c < 0.0)
			c = 0.0;  // ulp guard when the final speed grazes a walking speed
		plan.contributions.push_back(c);
	}
	return plan;
}

/// Horizon encoded by a segment length: must be a positive integer within
/// tolerance.
inline long long integer_horizon(double length)
{
	const long long horizon = std::llround(length);
	if (horizon < 1 || !approx_equal(static_cast<double>(horizon), length))
		throw Error(Errc::non_integer_horizon,
		            "online schedules require a positive integer segment length, got " +
		            format_real(length));
	return horizon;
}

/// The online schedule over [0, horizon]. Swarm robot j first walks the
/// combined slice of the robots before it, then alternates searching its
/// own slice of each unit and walking the rest; within unit [m, m+1] it
/// searches [m + prefix_j, m + prefix_{j+1}]. Every swarm robot passes
/// every integer point m at time m / swarm_speed, and together the slices
/// cover each unit exactly. Excluded robots hold one idle phase spanning
/// the whole run.
inline Leapfrog_schedule leapfrog_schedule(const Instance& inst, long long horizon)
{
	ensure_valid_instance(inst);
	if (horizon < 1)
		throw Error(Errc::non_integer_horizon,
		            "horizon must be a positive integer, got " + std::to_string(horizon));

	Leapfrog_schedule result;
	result.plan = swarm_speed(inst);
	result.horizon = horizon;
	result.unit_time = 1.0 / result.plan.swarm_speed;

	const double finishing = static_cast<double>(horizon) * result.unit_time;
	Schedule& sched = result.schedule;
	sched.finishing_time = finishing;
	sched.robot_phases.resize(inst.robots.size());

	const std::vector<double>& contribution = result.plan.contributions;
	std::vector<double> prefix(contribution.size() + 1, 0.0);
	for (std::size_t j = 0; j < contribution.size(); ++j)
		prefix[j + 1] = prefix[j] + contribution[j];

	for (std::size_t j = 0; j < result.plan.swarm.size(); ++j) {
		const std::size_t idx = result.plan.swarm[j];
		const Robot& r = inst.robots[idx];
		auto& phases = sched.robot_phases[idx];
		double t = 0.0;
		const auto emit = [&](Phase_mode mode, double speed, double x0, double x1) {
			if (!(x1 > x0))
				return;
			const double t1 = t + (x1 - x0) / speed;
			phases.push_back({mode, t, t1, x0, x1});
			t = t1;
		};
		emit(Phase_mode::walk, r.walk_speed, 0.0, prefix[j]);
		for (long long m = 0; m < horizon; ++m) {
			const double base = static_cast<double>(m);
			emit(Phase_mode::search, r.search_speed, base + prefix[j], base + prefix[j + 1]);
			const double next_start = (m + 1 < horizon)
				? base + 1.0 + prefix[j]
				: static_cast<double>(horizon);
			emit(Phase_mode::walk, r.walk_speed, base + prefix[j + 1], next_start);
		}
	}
	for (std::size_t idx : result.plan.excluded)
		sched.robot_phases[idx] = {{Phase_mode::idle, 0.0, finishing, 0.0, 0.0}};

	return result;
}

inline Leapfrog_schedule leapfrog_schedule(const Instance& inst)
{
	ensure_valid_instance(inst);
	return leapfrog_schedule(inst, integer_horizon(inst.length));
}

}  // namespace beachcomb

#endif
