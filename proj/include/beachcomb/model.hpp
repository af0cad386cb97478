#ifndef BEACHCOMB_MODEL_HPP
#define BEACHCOMB_MODEL_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Core domain types shared by the solvers, the verifier and the CLI:
// robots, instances, piecewise schedules, swarm plans, input validation
// and the canonical robot ordering. Everything here is an immutable
// value type; nothing keeps interior mutable state.

namespace beachcomb {

// All speeds, times and positions are double-precision reals. Equality
// checks use relative tolerance 1e-9 with an absolute floor of 1e-12
// near zero.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

inline bool approx_equal(double a, double b, double rel = kRelTol, double abs = kAbsTol)
{
	const double diff = std::fabs(a - b);
	if (diff <= abs)
		return true;
	return diff <= rel * std::max(std::fabs(a), std::fabs(b));
}

inline double relative_difference(double a, double b)
{
	const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
	return std::fabs(a - b) / scale;
}

/// Locale-independent rendering with 12 significant digits, the precision
/// used for every serialized real (JSON and CSV alike).
inline std::string format_real(double value, int precision = 12)
{
	char buf[64];
	const auto res = std::to_chars(buf, buf + sizeof buf, value,
	                               std::chars_format::general, precision);
	return std::string(buf, res.ptr);
}

/// Nearest double to the 12-significant-digit decimal rendering of `value`.
inline double round_real(double value, int precision = 12)
{
	const std::string text = format_real(value, precision);
	double out = value;
	std::from_chars(text.data(), text.data() + text.size(), out);
	return out;
}

enum class Errc {
	non_positive_speed,
	search_not_slower_than_walk,
	empty_fleet,
	non_positive_length,
	robot_mismatch,
	non_integer_horizon,
	epsilon_out_of_range,
	alpha_out_of_range,
	speed_out_of_range,
	invalid_permutation,
	fleet_too_large,
	usage_error,
	io_error,
	parse_error,
};

class Error : public std::runtime_error {
public:
	Error(Errc code, const std::string& message)
		: std::runtime_error(message), code_(code) {}

	Errc code() const { return code_; }

private:
	Errc code_;
};

/// A robot is a (searching speed, walking speed) pair. Searching is the
/// slow, thorough activity; walking is plain traversal and is strictly
/// faster. Speeds are in segment lengths per unit time.
struct Robot {
	std::string id;
	double search_speed = 0.0;
	double walk_speed = 0.0;

	// 1/search_speed - 1/walk_speed: the extra time per unit length that
	// searching costs over walking. Positive for every valid robot.
	double slowdown() const { return 1.0 / search_speed - 1.0 / walk_speed; }
};

/// A fleet of robots plus the segment [0, length]. All robots start at
/// position 0 at time 0. Input order is preserved.
struct Instance {
	std::vector<Robot> robots;
	double length = 0.0;
};

enum class Phase_mode { walk, search, idle };

/// One piece of a robot timeline: a constant-activity stretch from
/// (t0, x0) to (t1, x1).
struct Phase {
	Phase_mode mode = Phase_mode::idle;
	double t0 = 0.0;
	double t1 = 0.0;
	double x0 = 0.0;
	double x1 = 0.0;

	double duration() const { return t1 - t0; }
	double displacement() const { return x1 - x0; }
};

/// Per-robot timelines, index-aligned with Instance::robots. Phases are
/// contiguous in time from t = 0 and contiguous in position; every robot
/// starts at position 0.
struct Schedule {
	std::vector<std::vector<Phase>> robot_phases;
	double finishing_time = 0.0;
};

/// Swarm membership and per-unit contributions for the online schedule:
/// the swarm robots move in lockstep from integer point to integer point
/// at `swarm_speed`, each searching a `contributions[j]` slice of every
/// unit. Excluded robots (walking speed at or below the swarm speed)
/// stay motionless.
struct Swarm_plan {
	std::vector<std::size_t> swarm;     // instance indices, non-increasing walk speed
	std::vector<std::size_t> excluded;  // remaining indices, same ordering continued
	double swarm_speed = 0.0;
	std::vector<double> contributions;  // per swarm member, sums to 1
	std::vector<double> slowdowns;      // per swarm member, 1/s - 1/w
	std::vector<double> admission_speeds;  // swarm speed after each admission
};

inline void ensure_valid_instance(const Instance& inst)
{
	if (inst.robots.empty())
		throw Error(Errc::empty_fleet, "instance has no robots");
	if (!std::isfinite(inst.length) || inst.length <= 0.0)
		throw Error(Errc::non_positive_length,
		            "length: must be a positive finite real, got " + format_real(inst.length));
	for (std::size_t i = 0; i < inst.robots.size(); ++i) {
		const Robot& r = inst.robots[i];
		const std::string who = "robot \"" + r.id + "\" (index " + std::to_string(i) + ")";
		if (!std::isfinite(r.search_speed) || r.search_speed <= 0.0)
			throw Error(Errc::non_positive_speed,
			            who + ": search_speed must be a positive finite real, got " +
			            format_real(r.search_speed));
		if (!std::isfinite(r.walk_speed) || r.walk_speed <= 0.0)
			throw Error(Errc::non_positive_speed,
			            who + ": walk_speed must be a positive finite real, got " +
			            format_real(r.walk_speed));
		if (!(r.search_speed < r.walk_speed))
			throw Error(Errc::search_not_slower_than_walk,
			            who + ": search_speed " + format_real(r.search_speed) +
			            " must be strictly less than walk_speed " + format_real(r.walk_speed));
	}
}

/// Validates and returns the instance, or throws an Error naming the
/// offending robot and field.
inline Instance validate_instance(Instance raw)
{
	ensure_valid_instance(raw);
	return raw;
}

/// Robot indices sorted by non-decreasing walking speed; ties broken by
/// non-decreasing searching speed, then input index. This is the spatial
/// order of the optimal offline schedule: slower walkers search closer
/// to the start.
inline std::vector<std::size_t> canonical_offline_order(const Instance& inst)
{
	std::vector<std::size_t> order(inst.robots.size());
	std::iota(order.begin(), order.end(), std::size_t{0});
	std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
		const Robot& ra = inst.robots[a];
		const Robot& rb = inst.robots[b];
		if (ra.walk_speed != rb.walk_speed)
			return ra.walk_speed < rb.walk_speed;
		if (ra.search_speed != rb.search_speed)
			return ra.search_speed < rb.search_speed;
		return a < b;
	});
	return order;
}

}  // namespace beachcomb

#endif
