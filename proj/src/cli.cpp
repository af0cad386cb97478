#include "beachcomb/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "beachcomb/analysis.hpp"
#include "beachcomb/generators.hpp"
#include "beachcomb/io.hpp"
#include "beachcomb/offline.hpp"
#include "beachcomb/online.hpp"
#include "beachcomb/oracle.hpp"
#include "beachcomb/verify.hpp"

namespace beachcomb {
namespace {

// BEACHCOMB_TOL overrides the default relative verification tolerance.
// Intended for tests only.
double env_tolerance()
{
	const char* raw = std::getenv("BEACHCOMB_TOL");
	if (raw == nullptr || *raw == '\0')
		return kRelTol;
	char* end = nullptr;
	const double value = std::strtod(raw, &end);
	if (end == raw || *end != '\0' || !(value > 0.0) || !std::isfinite(value))
		throw Error(Errc::usage_error,
		            std::string("BEACHCOMB_TOL must be a positive real, got \"") + raw + "\"");
	return value;
}

void emit(const std::string& text, const std::string& out_path)
{
	if (out_path.empty())
		std::cout << text;
	else
		write_text_file(out_path, text);
}

/// Parses "2..8", "2,3,4" or any comma-separated mix of integers and
/// inclusive ranges.
std::vector<int> parse_int_list(const std::string& text)
{
	std::vector<int> values;
	std::stringstream items(text);
	std::string item;
	while (std::getline(items, item, ',')) {
		if (item.empty())
			throw Error(Errc::usage_error, "empty entry in \"" + text + "\"");
		const auto dots = item.find("..");
		try {
			if (dots == std::string::npos) {
				values.push_back(std::stoi(item));
			} else {
				const int lo = std::stoi(item.substr(0, dots));
				const int hi = std::stoi(item.substr(dots + 2));
				if (hi < lo)
					throw Error(Errc::usage_error, "empty range \"" + item + "\"");
				for (int v = lo; v <= hi; ++v)
					values.push_back(v);
			}
		} catch (const std::invalid_argument&) {
			throw Error(Errc::usage_error, "cannot parse \"" + item + "\" as an integer");
		} catch (const std::out_of_range&) {
			throw Error(Errc::usage_error, "\"" + item + "\" is out of integer range");
		}
	}
	if (values.empty())
		throw Error(Errc::usage_error, "no values in \"" + text + "\"");
	return values;
}

Generator_spec::Kind kind_from_name(const std::string& name)
{
	if (name == "random") return Generator_spec::Kind::random;
	if (name == "w-uniform") return Generator_spec::Kind::w_uniform;
	if (name == "totally-uniform") return Generator_spec::Kind::totally_uniform;
	if (name == "prop1") return Generator_spec::Kind::prop1;
	throw Error(Errc::usage_error, "unknown generator kind \"" + name + "\"");
}

struct Gen_options {
	std::string kind = "random";
	int n = 4;
	std::uint64_t seed = 0;
	double length = 1.0;
	double epsilon = 0.5;
	double alpha = 0.5;
	double walk = 1.0;
	double walk_min = 1e-2;
	double walk_max = 1e2;

	Generator_spec to_spec() const
	{
		Generator_spec spec;
		spec.kind = kind_from_name(kind);
		spec.n = n;
		spec.seed = seed;
		spec.length = length;
		spec.epsilon = epsilon;
		spec.alpha = alpha;
		spec.walk = walk;
		spec.walk_min = walk_min;
		spec.walk_max = walk_max;
		return spec;
	}
};

void add_gen_options(CLI::App& cmd, Gen_options& opt, bool with_n)
{
	cmd.add_option("--kind", opt.kind, "Instance family: random, w-uniform, totally-uniform, prop1")
		->capture_default_str();
	if (with_n)
		cmd.add_option("--n", opt.n, "Number of robots")->capture_default_str();
	cmd.add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
	cmd.add_option("--length", opt.length, "Segment length")->capture_default_str();
	cmd.add_option("--epsilon", opt.epsilon, "prop1 family parameter in (0, 1)")
		->capture_default_str();
	cmd.add_option("--alpha", opt.alpha, "totally-uniform common search speed in (0, 1)")
		->capture_default_str();
	cmd.add_option("--walk", opt.walk, "w-uniform common walk speed")->capture_default_str();
	cmd.add_option("--wmin", opt.walk_min, "random kind: minimum walk speed")
		->capture_default_str();
	cmd.add_option("--wmax", opt.walk_max, "random kind: maximum walk speed")
		->capture_default_str();
}

int do_solve_offline(const std::string& in, const std::string& out)
{
	const Instance inst = load_instance(in);
	const Offline_solution sol = comb_schedule(inst);
	emit(dump_json(schedule_to_json(inst, sol.schedule)), out);
	std::cout << "S_opt=" << format_real(sol.optimal_speed)
	          << " T_opt=" << format_real(sol.optimal_time) << "\n";
	return 0;
}

int do_solve_online(const std::string& in, std::optional<long long> horizon_opt,
                    const std::string& out)
{
	Instance inst = load_instance(in);
	const long long horizon = horizon_opt ? *horizon_opt : integer_horizon(inst.length);
	inst.length = static_cast<double>(horizon);
	ensure_valid_instance(inst);
	const Leapfrog_schedule lf = leapfrog_schedule(inst, horizon);
	emit(dump_json(schedule_to_json(inst, lf.schedule)), out);
	std::cout << dump_json(swarm_plan_to_json(inst, lf.plan));
	std::cout << "S=" << format_real(lf.plan.swarm_speed)
	          << " T_online=" << format_real(lf.schedule.finishing_time) << "\n";
	return 0;
}

int do_verify(const std::string& in, const std::string& sched_path, const std::string& out)
{
	const Instance inst = load_instance(in);
	const Schedule sched = load_schedule(inst, sched_path);
	const Validation_report report = validate(inst, sched, env_tolerance());
	emit(dump_json(validation_report_to_json(inst, report)), out);
	return report.feasible ? 0 : 1;
}

int do_ratio(const std::string& in, const std::string& out)
{
	const Instance inst = load_instance(in);
	const Ratio_report report = competitive_ratio(inst);
	emit(dump_json(ratio_report_to_json(report)), out);
	return report.bound_2_satisfied ? 0 : 1;
}

int do_wuniform_table(const std::string& n_list, const std::string& out)
{
	std::ostringstream csv;
	csv << "n,alpha_star,ratio_star\n";
	for (int n : parse_int_list(n_list)) {
		const Wuniform_max max = maximize_f(n);
		csv << n << "," << format_real(max.alpha_star) << ","
		    << format_real(max.ratio_star) << "\n";
	}
	emit(csv.str(), out);
	return 0;
}

int do_asymptote()
{
	const Asymptote limit = asymptotic_limit();
	std::cout << "c_star=" << format_real(limit.c_star)
	          << " limit=" << format_real(limit.limit) << "\n";
	return 0;
}

int do_gen(const Gen_options& opt, const std::string& out)
{
	const Instance inst = generate(opt.to_spec());
	emit(dump_json(instance_to_json(inst)), out);
	return 0;
}

int do_sweep(const Gen_options& opt, long long count, int nmax, const std::string& out)
{
	if (count < 1)
		throw Error(Errc::usage_error, "sweep count must be positive");
	if (nmax < 1)
		throw Error(Errc::usage_error, "sweep --n must be positive");

	std::ostringstream csv;
	csv << "# beachcomb sweep kind=" << opt.kind << " count=" << count
	    << " seed=" << opt.seed << " nmax=" << nmax << " rng=" << rng_id() << "\n";
	csv << "index,n,t_offline,t_online,ratio\n";

	double max_ratio = -std::numeric_limits<double>::infinity();
	long long max_index = 0;
	bool bound_violated = false;
	const Generator_spec::Kind kind = kind_from_name(opt.kind);
	for (long long i = 0; i < count; ++i) {
		Generator_spec spec = opt.to_spec();
		Rng chooser(mix_seed(opt.seed, 2 * static_cast<std::uint64_t>(i)));
		spec.seed = mix_seed(opt.seed, 2 * static_cast<std::uint64_t>(i) + 1);
		switch (kind) {
		case Generator_spec::Kind::random:
		case Generator_spec::Kind::w_uniform:
			spec.n = chooser.uniform_count(nmax);
			break;
		case Generator_spec::Kind::totally_uniform:
			spec.n = chooser.uniform_count(nmax);
			spec.alpha = chooser.uniform(1e-3, 1.0 - 1e-3);
			break;
		case Generator_spec::Kind::prop1:
			spec.epsilon = chooser.uniform(1e-3, 1.0 - 1e-3);
			break;
		}
		const Instance inst = generate(spec);
		const Ratio_report report = competitive_ratio(inst);
		csv << i << "," << inst.robots.size() << "," << format_real(report.t_offline)
		    << "," << format_real(report.t_online) << "," << format_real(report.ratio)
		    << "\n";
		if (report.ratio > max_ratio) {
			max_ratio = report.ratio;
			max_index = i;
		}
		if (!report.bound_2_satisfied)
			bound_violated = true;
	}
	const std::string summary =
		"# max_ratio=" + format_real(max_ratio) + " index=" + std::to_string(max_index);
	csv << summary << "\n";
	emit(csv.str(), out);
	if (!out.empty())
		std::cout << summary.substr(2) << "\n";
	return bound_violated ? 1 : 0;
}

int do_oracle_best_order(const std::string& in)
{
	const Instance inst = load_instance(in);
	const Ordering_result best = best_order_bruteforce(inst.robots);
	nlohmann::json order = nlohmann::json::array();
	for (std::size_t idx : best.permutation)
		order.push_back(inst.robots[idx].id);
	std::cout << dump_json({{"order", order}, {"speed", real_to_json(best.speed)}});
	return 0;
}

int do_oracle_grid_max(int n, double step)
{
	const Grid_max best = grid_max_wuniform(n, step);
	nlohmann::json argmax = nlohmann::json::array();
	for (double v : best.argmax)
		argmax.push_back(real_to_json(v));
	std::cout << dump_json({{"argmax", argmax}, {"value", real_to_json(best.value)}});
	return 0;
}

int exit_code_for(const Error& e)
{
	switch (e.code()) {
	case Errc::non_integer_horizon:
	case Errc::epsilon_out_of_range:
	case Errc::alpha_out_of_range:
	case Errc::speed_out_of_range:
	case Errc::invalid_permutation:
	case Errc::fleet_too_large:
	case Errc::usage_error:
		return 2;
	default:
		return 3;
	}
}

}  // namespace

int run_cli(int argc, const char* const* argv)
{
	CLI::App app{"beachcomb: schedule two-speed robot fleets searching a segment"};
	app.require_subcommand(1);

	std::string instance_path;
	std::string schedule_path;
	std::string out_path;
	std::optional<long long> horizon;
	std::string n_list = "2..4";
	Gen_options gen_opt;
	long long sweep_count = 100;
	int sweep_nmax = 32;
	int grid_n = 2;
	double grid_step = 0.005;

	CLI::App* solve_offline = app.add_subcommand(
		"solve-offline", "Optimal offline schedule for a known segment");
	solve_offline->add_option("-i,--instance", instance_path, "Instance JSON")->required();
	solve_offline->add_option("-o,--output", out_path, "Schedule JSON output path");

	CLI::App* solve_online = app.add_subcommand(
		"solve-online", "Online schedule over an integer horizon");
	solve_online->add_option("-i,--instance", instance_path, "Instance JSON")->required();
	solve_online->add_option("--horizon", horizon,
	                         "Number of unit segments (defaults to the instance length)");
	solve_online->add_option("-o,--output", out_path, "Schedule JSON output path");

	CLI::App* verify_cmd = app.add_subcommand(
		"verify", "Validate a schedule against an instance (exit 0 iff feasible)");
	verify_cmd->add_option("-i,--instance", instance_path, "Instance JSON")->required();
	verify_cmd->add_option("-s,--schedule", schedule_path, "Schedule JSON")->required();
	verify_cmd->add_option("-o,--output", out_path, "Report JSON output path");

	CLI::App* ratio_cmd = app.add_subcommand(
		"ratio", "Online/offline finishing-time ratio of an instance");
	ratio_cmd->add_option("-i,--instance", instance_path, "Instance JSON")->required();
	ratio_cmd->add_option("-o,--output", out_path, "Report JSON output path");

	CLI::App* table_cmd = app.add_subcommand(
		"wuniform-table", "CSV of the maximal w-uniform ratio per fleet size");
	table_cmd->add_option("--n", n_list, "Fleet sizes, e.g. 2..4 or 2,3,4")
		->capture_default_str();
	table_cmd->add_option("-o,--output", out_path, "CSV output path");

	app.add_subcommand("asymptote", "Large-fleet limit of the w-uniform ratio");

	CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance");
	add_gen_options(*gen_cmd, gen_opt, true);
	gen_cmd->add_option("-o,--output", out_path, "Instance JSON output path");

	CLI::App* sweep_cmd = app.add_subcommand(
		"sweep", "Generate many instances and record their ratios as CSV");
	add_gen_options(*sweep_cmd, gen_opt, false);
	sweep_cmd->add_option("--count", sweep_count, "Number of instances")->required();
	sweep_cmd->add_option("--n", sweep_nmax, "Maximum robots per instance")
		->capture_default_str();
	sweep_cmd->add_option("-o,--output", out_path, "CSV output path");

	CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force certification helpers");
	oracle_cmd->require_subcommand(1);
	CLI::App* best_order = oracle_cmd->add_subcommand(
		"best-order", "Exhaustive best spatial order (n <= 9)");
	best_order->add_option("-i,--instance", instance_path, "Instance JSON")->required();
	CLI::App* grid_max = oracle_cmd->add_subcommand(
		"grid-max", "Exhaustive grid max of the w-uniform ratio bound");
	grid_max->add_option("--n", grid_n, "Dimension (2 or 3)")->capture_default_str();
	grid_max->add_option("--step", grid_step, "Grid step in [1e-3, 0.1]")
		->capture_default_str();

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	try {
		if (solve_offline->parsed())
			return do_solve_offline(instance_path, out_path);
		if (solve_online->parsed())
			return do_solve_online(instance_path, horizon, out_path);
		if (verify_cmd->parsed())
			return do_verify(instance_path, schedule_path, out_path);
		if (ratio_cmd->parsed())
			return do_ratio(instance_path, out_path);
		if (table_cmd->parsed())
			return do_wuniform_table(n_list, out_path);
		if (app.get_subcommand("asymptote")->parsed())
			return do_asymptote();
		if (gen_cmd->parsed())
			return do_gen(gen_opt, out_path);
		if (sweep_cmd->parsed())
			return do_sweep(gen_opt, sweep_count, sweep_nmax, out_path);
		if (oracle_cmd->parsed()) {
			if (best_order->parsed())
				return do_oracle_best_order(instance_path);
			return do_oracle_grid_max(grid_n, grid_step);
		}
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return exit_code_for(e);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
	return 2;
}

int run_cli(const std::vector<std::string>& argv)
{
	std::vector<const char*> pointers;
	pointers.reserve(argv.size());
	for (const std::string& arg : argv)
		pointers.push_back(arg.c_str());
	return run_cli(static_cast<int>(pointers.size()), pointers.data());
}

}  // namespace beachcomb
