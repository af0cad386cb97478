#ifndef BEACHCOMB_ANALYSIS_HPP
#define BEACHCOMB_ANALYSIS_HPP

#include <cmath>
#include <span>

#include "beachcomb/model.hpp"
#include "beachcomb/offline.hpp"
#include "beachcomb/online.hpp"

// Competitive-ratio computations: instance-level online/offline ratio,
// the w-uniform ratio curve and its maximizer, and the asymptotic ceiling
// for arbitrarily many robots.

namespace beachcomb {

struct Ratio_report {
	double t_offline = 0.0;  // optimal finishing time on the unit segment
	double t_online = 0.0;   // 1 / swarm speed
	double ratio = 0.0;      // t_online / t_offline
	bool bound_2_satisfied = false;
};

struct Wuniform_max {
	int n = 0;
	double alpha_star = 0.0;  // maximizing common search speed (walk speed 1)
	double ratio_star = 0.0;
};

struct Asymptote {
	double c_star = 0.0;
	double limit = 0.0;
};

/// Finishing-time ratio of the online schedule versus the optimal offline
/// one, evaluated on the unit segment (the online schedule has the same
/// per-unit speed on every integer horizon).
inline Ratio_report competitive_ratio(const Instance& inst)
{
	Instance unit = inst;
	unit.length = 1.0;
	const Offline_solution offline = comb_schedule(unit);
	const Swarm_plan plan = swarm_speed(unit);

	Ratio_report report;
	report.t_offline = offline.optimal_time;
	report.t_online = 1.0 / plan.swarm_speed;
	report.ratio = report.t_online / report.t_offline;
	report.bound_2_satisfied = report.ratio < 2.0;
	return report;
}

/// Two-robot family whose ratio equals 2 - epsilon: a near-unit-speed
/// walker that ends up searching alone online, next to a fast walker the
/// offline schedule exploits fully.
inline Instance prop1_instance(double epsilon)
{
	if (!(epsilon > 0.0 && epsilon < 1.0))
		throw Error(Errc::epsilon_out_of_range,
		            "epsilon must lie strictly between 0 and 1, got " + format_real(epsilon));
	Instance inst;
	inst.length = 1.0;
	inst.robots = {
		{"r1", 1.0 - epsilon / 2.0, 1.0},
		{"r2", 1.0, (2.0 - epsilon) / epsilon},
	};
	return validate_instance(std::move(inst));
}

/// Ratio curve for n robots of common walking speed 1 and common searching
/// speed alpha:
///   f_n(alpha) = (alpha (n-1) + 1) (1 - (1-alpha)^n) / (alpha n).
inline double f_n(int n, double alpha)
{
	if (n < 1)
		throw Error(Errc::usage_error, "fleet size must be at least 1, got " + std::to_string(n));
	if (!(alpha > 0.0 && alpha < 1.0))
		throw Error(Errc::alpha_out_of_range,
		            "alpha must lie strictly between 0 and 1, got " + format_real(alpha));
	if (n == 1)
		return 1.0;
	const double nd = static_cast<double>(n);
	return (alpha * (nd - 1.0) + 1.0) * (1.0 - std::pow(1.0 - alpha, nd)) / (alpha * nd);
}

/// Maximizes f_n over (0, 1) by bisecting its derivative's sign change:
/// the critical-point equation
///   (1-a)^{n-1} (1 + a(n-1) + a^2 n(n-1)) - 1 = 0
/// is positive at the bracket's left end and negative near 1, with a
/// single root between. Bisection to 1e-12 in alpha; no Newton steps.
inline Wuniform_max maximize_f(int n)
{
	if (n < 2)
		throw Error(Errc::usage_error,
		            "the ratio curve is only maximized for n >= 2, got " + std::to_string(n));
	const double nd = static_cast<double>(n);
	const auto critical = [nd](double a) {
		return std::pow(1.0 - a, nd - 1.0) *
		       (1.0 + a * (nd - 1.0) + a * a * nd * (nd - 1.0)) - 1.0;
	};
	double lo = n >= 5 ? 1.0 / (nd - 1.0) : 1.0 / (nd + 1.0);
	double hi = 1.0 - 1e-12;
	while (hi - lo > 1e-12) {
		const double mid = 0.5 * (lo + hi);
		(critical(mid) > 0.0 ? lo : hi) = mid;
	}
	const double alpha = 0.5 * (lo + hi);
	return {n, alpha, f_n(n, alpha)};
}

/// Limit of the maximal w-uniform ratio as the fleet grows: the maximum of
/// (1 + 1/c)(1 - e^{-c}) over c > 0, located by golden-section search.
inline Asymptote asymptotic_limit()
{
	const auto value = [](double c) { return (1.0 + 1.0 / c) * (1.0 - std::exp(-c)); };
	double a = 1e-4;
	double b = 50.0;
	const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
	double x1 = b - phi * (b - a);
	double x2 = a + phi * (b - a);
	double f1 = value(x1);
	double f2 = value(x2);
	while (b - a > 1e-10) {
		if (f1 < f2) {
			a = x1;
			x1 = x2;
			f1 = f2;
			x2 = a + phi * (b - a);
			f2 = value(x2);
		} else {
			b = x2;
			x2 = x1;
			f2 = f1;
			x1 = b - phi * (b - a);
			f1 = value(x1);
		}
	}
	const double c = 0.5 * (a + b);
	return {c, value(c)};
}

/// Closed-form ratio for a fleet of common walking speed 1 and searching
/// speeds s_k:
///   (1 - prod (1-s_k)) (1 + 1 / sum s_k/(1-s_k)).
/// Equals the end-to-end online/offline ratio of that fleet (every robot
/// joins the swarm when all walking speeds exceed the swarm speed).
inline double wuniform_ratio_bound(std::span<const double> search_speeds)
{
	if (search_speeds.empty())
		throw Error(Errc::usage_error, "at least one search speed is required");
	double complement_product = 1.0;
	double odds_sum = 0.0;
	for (double s : search_speeds) {
		if (!(s > 0.0 && s < 1.0))
			throw Error(Errc::speed_out_of_range,
			            "search speeds must lie strictly between 0 and 1, got " + format_real(s));
		complement_product *= 1.0 - s;
		odds_sum += s / (1.0 - s);
	}
	return (1.0 - complement_product) * (1.0 + 1.0 / odds_sum);
}

}  // namespace beachcomb

#endif
