#ifndef BEACHCOMB_IO_HPP
#define BEACHCOMB_IO_HPP

#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "beachcomb/analysis.hpp"
#include "beachcomb/model.hpp"
#include "beachcomb/verify.hpp"

// JSON formats. Instances:
//   {"length": 1.0, "robots": [{"id": "r1", "search_speed": 0.5, "walk_speed": 1.0}, ...]}
// Schedules: top-level "finishing_time" plus per-robot phase lists keyed by id:
//   {"finishing_time": T, "robots": [{"id": ..., "phases": [{"mode": "walk|search|idle",
//    "t0": ..., "t1": ..., "x0": ..., "x1": ...}]}]}
// All reals are serialized with 12 significant digits.

namespace beachcomb {

inline nlohmann::json real_to_json(double value)
{
	return round_real(value);
}

inline nlohmann::json instance_to_json(const Instance& inst)
{
	nlohmann::json robots = nlohmann::json::array();
	for (const Robot& r : inst.robots)
		robots.push_back({{"id", r.id},
		                  {"search_speed", real_to_json(r.search_speed)},
		                  {"walk_speed", real_to_json(r.walk_speed)}});
	return {{"length", real_to_json(inst.length)}, {"robots", robots}};
}

namespace detail {

inline double require_number(const nlohmann::json& obj, const char* key, const std::string& where)
{
	if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number())
		throw Error(Errc::parse_error, where + ": missing or non-numeric \"" + key + "\"");
	return obj[key].get<double>();
}

inline std::string require_string(const nlohmann::json& obj, const char* key, const std::string& where)
{
	if (!obj.is_object() || !obj.contains(key) || !obj[key].is_string())
		throw Error(Errc::parse_error, where + ": missing or non-string \"" + key + "\"");
	return obj[key].get<std::string>();
}

inline const nlohmann::json& require_array(const nlohmann::json& obj, const char* key,
                                           const std::string& where)
{
	if (!obj.is_object() || !obj.contains(key) || !obj[key].is_array())
		throw Error(Errc::parse_error, where + ": missing or non-array \"" + key + "\"");
	return obj[key];
}

}  // namespace detail

inline Instance instance_from_json(const nlohmann::json& j)
{
	Instance inst;
	inst.length = detail::require_number(j, "length", "instance");
	const nlohmann::json& robots = detail::require_array(j, "robots", "instance");
	std::size_t i = 0;
	for (const auto& rj : robots) {
		const std::string where = "robots[" + std::to_string(i) + "]";
		Robot r;
		r.id = detail::require_string(rj, "id", where);
		r.search_speed = detail::require_number(rj, "search_speed", where);
		r.walk_speed = detail::require_number(rj, "walk_speed", where);
		inst.robots.push_back(std::move(r));
		++i;
	}
	return validate_instance(std::move(inst));
}

inline const char* phase_mode_name(Phase_mode mode)
{
	switch (mode) {
	case Phase_mode::walk: return "walk";
	case Phase_mode::search: return "search";
	case Phase_mode::idle: return "idle";
	}
	return "idle";
}

inline Phase_mode phase_mode_from_name(const std::string& name, const std::string& where)
{
	if (name == "walk") return Phase_mode::walk;
	if (name == "search") return Phase_mode::search;
	if (name == "idle") return Phase_mode::idle;
	throw Error(Errc::parse_error, where + ": unknown phase mode \"" + name + "\"");
}

inline nlohmann::json schedule_to_json(const Instance& inst, const Schedule& sched)
{
	detail::ensure_aligned(inst, sched);
	nlohmann::json robots = nlohmann::json::array();
	for (std::size_t ri = 0; ri < inst.robots.size(); ++ri) {
		nlohmann::json phases = nlohmann::json::array();
		for (const Phase& ph : sched.robot_phases[ri])
			phases.push_back({{"mode", phase_mode_name(ph.mode)},
			                  {"t0", real_to_json(ph.t0)},
			                  {"t1", real_to_json(ph.t1)},
			                  {"x0", real_to_json(ph.x0)},
			                  {"x1", real_to_json(ph.x1)}});
		robots.push_back({{"id", inst.robots[ri].id}, {"phases", phases}});
	}
	return {{"finishing_time", real_to_json(sched.finishing_time)}, {"robots", robots}};
}

/// Rebuilds an index-aligned schedule from JSON, matching entries to
/// instance robots by id. Unknown, missing or surplus ids raise
/// Errc::robot_mismatch.
inline Schedule schedule_from_json(const Instance& inst, const nlohmann::json& j)
{
	Schedule sched;
	sched.finishing_time = detail::require_number(j, "finishing_time", "schedule");
	const nlohmann::json& robots = detail::require_array(j, "robots", "schedule");

	std::unordered_map<std::string, std::deque<std::size_t>> slots;
	for (std::size_t ri = 0; ri < inst.robots.size(); ++ri)
		slots[inst.robots[ri].id].push_back(ri);

	sched.robot_phases.resize(inst.robots.size());
	std::size_t matched = 0;
	std::size_t i = 0;
	for (const auto& rj : robots) {
		const std::string where = "schedule robots[" + std::to_string(i) + "]";
		const std::string id = detail::require_string(rj, "id", where);
		auto it = slots.find(id);
		if (it == slots.end() || it->second.empty())
			throw Error(Errc::robot_mismatch,
			            where + ": robot \"" + id + "\" does not match the instance");
		const std::size_t ri = it->second.front();
		it->second.pop_front();
		++matched;

		auto& phases = sched.robot_phases[ri];
		std::size_t pi = 0;
		for (const auto& pj : detail::require_array(rj, "phases", where)) {
			const std::string pwhere = where + ".phases[" + std::to_string(pi) + "]";
			Phase ph;
			ph.mode = phase_mode_from_name(detail::require_string(pj, "mode", pwhere), pwhere);
			ph.t0 = detail::require_number(pj, "t0", pwhere);
			ph.t1 = detail::require_number(pj, "t1", pwhere);
			ph.x0 = detail::require_number(pj, "x0", pwhere);
			ph.x1 = detail::require_number(pj, "x1", pwhere);
			phases.push_back(ph);
			++pi;
		}
		++i;
	}
	if (matched != inst.robots.size())
		throw Error(Errc::robot_mismatch,
		            "schedule covers " + std::to_string(matched) + " of " +
		            std::to_string(inst.robots.size()) + " instance robots");
	return sched;
}

inline nlohmann::json swarm_plan_to_json(const Instance& inst, const Swarm_plan& plan)
{
	nlohmann::json members = nlohmann::json::array();
	for (std::size_t idx : plan.swarm)
		members.push_back(inst.robots[idx].id);
	nlohmann::json excluded = nlohmann::json::array();
	for (std::size_t idx : plan.excluded)
		excluded.push_back(inst.robots[idx].id);
	nlohmann::json contributions = nlohmann::json::array();
	for (double c : plan.contributions)
		contributions.push_back(real_to_json(c));
	return {{"swarm_speed", real_to_json(plan.swarm_speed)},
	        {"members", members},
	        {"excluded", excluded},
	        {"contributions", contributions}};
}

inline nlohmann::json validation_report_to_json(const Instance& inst,
                                                const Validation_report& report)
{
	nlohmann::json gaps = nlohmann::json::array();
	for (const auto& gap : report.coverage_gaps)
		gaps.push_back({real_to_json(gap.first), real_to_json(gap.second)});
	nlohmann::json speeds = nlohmann::json::array();
	for (const Speed_violation& v : report.speed_violations)
		speeds.push_back({{"robot", inst.robots[v.robot].id},
		                  {"phase", v.phase},
		                  {"required", real_to_json(v.required)},
		                  {"allowed", real_to_json(v.allowed)}});
	nlohmann::json continuity = nlohmann::json::array();
	for (const Continuity_violation& v : report.continuity_violations)
		continuity.push_back({{"robot", inst.robots[v.robot].id},
		                      {"phase", v.phase},
		                      {"detail", v.detail}});
	return {{"feasible", report.feasible},
	        {"coverage_gaps", gaps},
	        {"speed_violations", speeds},
	        {"continuity_violations", continuity},
	        {"measured_finishing_time", real_to_json(report.measured_finishing_time)},
	        {"measured_speed", real_to_json(report.measured_speed)}};
}

inline nlohmann::json ratio_report_to_json(const Ratio_report& report)
{
	return {{"t_offline", real_to_json(report.t_offline)},
	        {"t_online", real_to_json(report.t_online)},
	        {"ratio", real_to_json(report.ratio)},
	        {"bound_2_satisfied", report.bound_2_satisfied}};
}

inline std::string dump_json(const nlohmann::json& j)
{
	return j.dump(2) + "\n";
}

inline std::string read_text_file(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error(Errc::io_error, path + ": cannot open for reading");
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw Error(Errc::io_error, path + ": cannot open for writing");
	out << text;
	out.flush();
	if (!out)
		throw Error(Errc::io_error, path + ": write failed");
}

/// Parses a JSON document, attributing parse failures (with line and
/// column) to `path`.
inline nlohmann::json parse_json_text(const std::string& text, const std::string& path)
{
	try {
		return nlohmann::json::parse(text);
	} catch (const nlohmann::json::parse_error& e) {
		throw Error(Errc::parse_error, path + ": " + e.what());
	}
}

namespace detail {

[[noreturn]] inline void rethrow_with_path(const Error& e, const std::string& path)
{
	const std::string what = e.what();
	if (what.rfind(path + ":", 0) == 0)
		throw e;
	throw Error(e.code(), path + ": " + what);
}

}  // namespace detail

inline Instance load_instance(const std::string& path)
{
	try {
		return instance_from_json(parse_json_text(read_text_file(path), path));
	} catch (const Error& e) {
		detail::rethrow_with_path(e, path);
	}
}

inline Schedule load_schedule(const Instance& inst, const std::string& path)
{
	try {
		return schedule_from_json(inst, parse_json_text(read_text_file(path), path));
	} catch (const Error& e) {
		detail::rethrow_with_path(e, path);
	}
}

}  // namespace beachcomb

#endif
