// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Criteria may be selected by number on the command
// line; by default all ten run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "beachcomb/analysis.hpp"
#include "beachcomb/cli.hpp"
#include "beachcomb/generators.hpp"
#include "beachcomb/io.hpp"
#include "beachcomb/offline.hpp"
#include "beachcomb/online.hpp"
#include "beachcomb/oracle.hpp"
#include "beachcomb/verify.hpp"

#include "test_util.hpp"

using namespace beachcomb;

namespace {

struct Outcome {
	bool pass = true;
	std::string detail;
};

struct Check_context {
	Outcome outcome;

	void require(bool ok, const std::string& what)
	{
		if (!ok) {
			outcome.pass = false;
			if (!outcome.detail.empty())
				outcome.detail += "; ";
			outcome.detail += what;
		}
	}

	void note(const std::string& what)
	{
		if (!outcome.detail.empty())
			outcome.detail += "; ";
		outcome.detail += what;
	}
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1: ratio table for n = 2..4 ------------------------------

Outcome table_reproduction()
{
	Check_context ctx;
	const auto start = std::chrono::steady_clock::now();
	const std::string csv_path = test_util::tmp_path("acceptance_table.csv");
	int exit_code = 0;
	{
		test_util::Capture_stdout capture;
		exit_code = run_cli({"beachcomb", "wuniform-table", "--n", "2..4", "-o", csv_path});
	}
	const double elapsed = seconds_since(start);
	ctx.require(exit_code == 0, "wuniform-table exited with " + std::to_string(exit_code));

	struct Row {
		int n;
		double alpha;
		double ratio;
	};
	std::vector<Row> rows;
	std::istringstream csv(read_text_file(csv_path));
	std::string line;
	std::getline(csv, line);  // header
	while (std::getline(csv, line)) {
		Row row{};
		if (std::sscanf(line.c_str(), "%d,%lf,%lf", &row.n, &row.alpha, &row.ratio) == 3)
			rows.push_back(row);
	}
	ctx.require(rows.size() == 3, "expected 3 rows, got " + std::to_string(rows.size()));
	const struct {
		int n;
		double alpha;
		double ratio;
		double tol_alpha;
		double tol_ratio;
	} expected[] = {
		{2, 0.5, 1.125, 1e-12, 1e-12},
		{3, 0.392375, 1.17605, 1e-4, 1e-4},
		{4, 0.322472, 1.20386, 1e-4, 1e-4},
	};
	for (std::size_t i = 0; i < rows.size() && i < 3; ++i) {
		ctx.require(rows[i].n == expected[i].n, "unexpected n in row");
		ctx.require(std::fabs(rows[i].alpha - expected[i].alpha) <= expected[i].tol_alpha,
		            "alpha_star(" + std::to_string(expected[i].n) + ") = " +
		            format_real(rows[i].alpha));
		ctx.require(std::fabs(rows[i].ratio - expected[i].ratio) <= expected[i].tol_ratio,
		            "ratio_star(" + std::to_string(expected[i].n) + ") = " +
		            format_real(rows[i].ratio));
	}
	ctx.require(elapsed < 1.0, "took " + format_real(elapsed) + " s");
	ctx.note("alpha/ratio rows within tolerance in " + format_real(elapsed, 3) + " s");
	return ctx.outcome;
}

// ---- criterion 2: asymptotic ceiling -------------------------------------

Outcome asymptote_values()
{
	Check_context ctx;
	const auto start = std::chrono::steady_clock::now();
	std::string text;
	int exit_code = 0;
	{
		test_util::Capture_stdout capture;
		exit_code = run_cli({"beachcomb", "asymptote"});
		text = capture.text();
	}
	const double elapsed = seconds_since(start);
	ctx.require(exit_code == 0, "asymptote exited with " + std::to_string(exit_code));
	double c_star = 0.0;
	double limit = 0.0;
	ctx.require(std::sscanf(text.c_str(), "c_star=%lf limit=%lf", &c_star, &limit) == 2,
	            "unparseable output: " + text);
	ctx.require(std::fabs(c_star - 1.79328) <= 1e-3, "c_star = " + format_real(c_star));
	ctx.require(std::fabs(limit - 1.29843) <= 1e-4, "limit = " + format_real(limit));
	ctx.require(elapsed < 1.0, "took " + format_real(elapsed) + " s");
	ctx.note("c_star=" + format_real(c_star, 6) + " limit=" + format_real(limit, 6) +
	         " in " + format_real(elapsed, 3) + " s");
	return ctx.outcome;
}

// ---- criterion 3: the 2 - epsilon family ---------------------------------

Outcome adversarial_family()
{
	Check_context ctx;
	for (double epsilon : {0.9, 0.5, 0.1, 0.01, 0.001}) {
		const Ratio_report report = competitive_ratio(prop1_instance(epsilon));
		ctx.require(std::fabs(report.ratio - (2.0 - epsilon)) < 1e-9,
		            "ratio(eps=" + format_real(epsilon) + ") = " + format_real(report.ratio));
	}
	ctx.note("ratio = 2 - eps within 1e-9 for all five epsilons");
	return ctx.outcome;
}

// ---- criterion 4: ratio always in [1, 2) over 10,000 random instances ----

Outcome ratio_regression()
{
	Check_context ctx;
	const std::string csv_path = test_util::tmp_path("acceptance_sweep.csv");
	int exit_code = 0;
	{
		test_util::Capture_stdout capture;
		exit_code = run_cli({"beachcomb", "sweep", "--kind", "random", "--count", "10000",
		                     "--seed", "20240810", "--n", "32", "-o", csv_path});
	}
	ctx.require(exit_code == 0, "sweep exited with " + std::to_string(exit_code));

	std::istringstream csv(read_text_file(csv_path));
	std::string line;
	long long rows = 0;
	double max_ratio = 0.0;
	double summary_max = -1.0;
	while (std::getline(csv, line)) {
		if (line.rfind("# max_ratio=", 0) == 0) {
			std::sscanf(line.c_str(), "# max_ratio=%lf", &summary_max);
			continue;
		}
		if (line.empty() || line[0] == '#' || line[0] == 'i')
			continue;
		long long index = 0;
		long long n = 0;
		double t_off = 0.0;
		double t_on = 0.0;
		double ratio = 0.0;
		if (std::sscanf(line.c_str(), "%lld,%lld,%lf,%lf,%lf",
		                &index, &n, &t_off, &t_on, &ratio) != 5)
			continue;
		++rows;
		if (ratio > max_ratio)
			max_ratio = ratio;
		if (!(ratio >= 1.0 - 1e-9 && ratio < 2.0)) {
			ctx.require(false, "ratio out of [1, 2) at index " + std::to_string(index) +
			            ": " + format_real(ratio));
			break;
		}
	}
	ctx.require(rows == 10000, "expected 10000 rows, got " + std::to_string(rows));
	ctx.require(std::fabs(summary_max - max_ratio) < 1e-12, "summary max mismatch");
	ctx.note("10000 ratios in [1, 2), max observed " + format_real(max_ratio, 6));
	return ctx.outcome;
}

// ---- criterion 5: triple agreement on 1,000 random fleets ----------------

Outcome triple_agreement()
{
	Check_context ctx;
	double worst = 0.0;
	for (int i = 0; i < 1000; ++i) {
		Rng rng(mix_seed(501, i));
		const int n = rng.uniform_count(64);
		Instance inst;
		inst.length = 1.0;
		for (int r = 0; r < n; ++r) {
			const double walk = rng.uniform(1e-3, 1.0);
			inst.robots.push_back(
				{"r" + std::to_string(r + 1), walk * rng.uniform(1e-6, 1.0 - 1e-6), walk});
		}
		const double power = search_power(inst);
		std::vector<Robot> ordered;
		for (std::size_t idx : canonical_offline_order(inst))
			ordered.push_back(inst.robots[idx]);
		const auto unit = unit_search_lengths(ordered);
		const double total = std::accumulate(unit.begin(), unit.end(), 0.0);
		const Validation_report report = validate(inst, comb_schedule(inst).schedule);
		if (!report.feasible) {
			ctx.require(false, "schedule infeasible at fleet " + std::to_string(i));
			break;
		}
		worst = std::max(worst, relative_difference(power, total));
		worst = std::max(worst, relative_difference(power, report.measured_speed));
		if (worst >= 1e-9) {
			ctx.require(false, "disagreement " + format_real(worst) + " at fleet " +
			            std::to_string(i));
			break;
		}
	}
	ctx.note("worst relative disagreement " + format_real(worst, 3));
	return ctx.outcome;
}

// ---- criterion 6: exhaustive ordering agrees on 500 fleets ----------------

Outcome ordering_oracle()
{
	Check_context ctx;
	const auto start = std::chrono::steady_clock::now();
	for (int i = 0; i < 500; ++i) {
		Rng rng(mix_seed(601, i));
		const int n = rng.uniform_count(7);
		Instance inst;
		inst.length = 1.0;
		std::vector<double> walks;
		for (int r = 0; r < n; ++r) {
			double walk = 0.0;
			do {
				walk = rng.log_uniform(1e-1, 1e1);
				bool distinct = true;
				for (double other : walks)
					distinct = distinct && relative_difference(walk, other) > 1e-3;
				if (distinct)
					break;
			} while (true);
			walks.push_back(walk);
			inst.robots.push_back(
				{"r" + std::to_string(r + 1), walk * rng.uniform(0.05, 0.95), walk});
		}
		const Ordering_result best = best_order_bruteforce(inst.robots);
		const auto canonical = canonical_offline_order(inst);
		if (best.permutation != canonical) {
			ctx.require(false, "non-canonical best order at fleet " + std::to_string(i));
			break;
		}
		if (relative_difference(best.speed, search_power(inst)) >= 1e-9) {
			ctx.require(false, "speed mismatch at fleet " + std::to_string(i));
			break;
		}
	}
	const double elapsed = seconds_since(start);
	ctx.require(elapsed < 30.0, "took " + format_real(elapsed) + " s");
	ctx.note("500 fleets certified in " + format_real(elapsed, 3) + " s");
	return ctx.outcome;
}

// ---- criterion 7: swarm synchronization and coverage ----------------------

Outcome swarm_synchronization()
{
	Check_context ctx;
	double worst = 0.0;
	for (int i = 0; i < 1000; ++i) {
		Rng rng(mix_seed(701, i));
		const int n = rng.uniform_count(16);
		Instance inst = test_util::random_fleet(rng, n);
		inst.length = 4.0;
		const Leapfrog_schedule lf = leapfrog_schedule(inst);
		for (std::size_t idx : lf.plan.swarm) {
			const auto& phases = lf.schedule.robot_phases[idx];
			for (long long m = 0; m <= lf.horizon; ++m) {
				const double drift =
					std::fabs(position_at_time(phases, m * lf.unit_time) - m);
				worst = std::max(worst, drift);
			}
		}
		if (worst >= 1e-9) {
			ctx.require(false, "drift " + format_real(worst) + " at fleet " +
			            std::to_string(i));
			break;
		}
		const Validation_report report = validate(inst, lf.schedule);
		if (!report.feasible || !report.coverage_gaps.empty()) {
			ctx.require(false, "coverage failure at fleet " + std::to_string(i));
			break;
		}
	}
	ctx.note("worst integer-point drift " + format_real(worst, 3));
	return ctx.outcome;
}

// ---- criterion 8: maximal ratio grows with n under the ceiling ------------

Outcome ratio_monotonicity()
{
	Check_context ctx;
	double previous = 1.0;
	for (int n = 2; n <= 50; ++n) {
		const Wuniform_max max = maximize_f(n);
		ctx.require(max.ratio_star > previous,
		            "ratio_star(" + std::to_string(n) + ") did not increase");
		ctx.require(max.ratio_star < 1.29843 + 1e-6,
		            "ratio_star(" + std::to_string(n) + ") above the ceiling");
		previous = max.ratio_star;
	}
	ctx.note("strictly increasing up to ratio_star(50) = " + format_real(previous, 6));
	return ctx.outcome;
}

// ---- criterion 9: grid argmax is totally uniform ---------------------------

Outcome grid_certification()
{
	Check_context ctx;
	const auto start = std::chrono::steady_clock::now();
	const struct {
		int n;
		double step;
	} cases[] = {{2, 0.005}, {3, 0.01}};
	for (const auto& c : cases) {
		const Grid_max best = grid_max_wuniform(c.n, c.step);
		for (std::size_t a = 0; a < best.argmax.size(); ++a)
			for (std::size_t b = a + 1; b < best.argmax.size(); ++b)
				ctx.require(std::fabs(best.argmax[a] - best.argmax[b]) <= c.step + 1e-12,
				            "argmax coordinates differ beyond one step (n = " +
				            std::to_string(c.n) + ")");
	}
	const double elapsed = seconds_since(start);
	ctx.require(elapsed < 5.0, "took " + format_real(elapsed) + " s");
	ctx.note("equal-coordinate argmax for both grids in " + format_real(elapsed, 3) + " s");
	return ctx.outcome;
}

// ---- criterion 10: the common-walk closed form matches the general one ----

Outcome wuniform_agreement()
{
	Check_context ctx;
	double worst = 0.0;
	for (int i = 0; i < 1000; ++i) {
		Rng rng(mix_seed(1001, i));
		const int n = rng.uniform_count(20);
		const double walk = rng.log_uniform(1e-2, 1e2);
		Instance inst;
		inst.length = 1.0;
		std::vector<double> speeds;
		for (int r = 0; r < n; ++r) {
			speeds.push_back(walk * rng.uniform(0.01, 0.99));
			inst.robots.push_back({"r" + std::to_string(r + 1), speeds.back(), walk});
		}
		worst = std::max(worst, relative_difference(wuniform_speed(speeds, walk),
		                                            search_power(inst)));
		if (worst >= 1e-12) {
			ctx.require(false, "disagreement " + format_real(worst) + " at fleet " +
			            std::to_string(i));
			break;
		}
	}
	ctx.note("worst relative disagreement " + format_real(worst, 3));
	return ctx.outcome;
}

}  // namespace

int main(int argc, char** argv)
{
	const struct {
		int number;
		const char* name;
		std::function<Outcome()> run;
	} criteria[] = {
		{1, "ratio table n=2..4", table_reproduction},
		{2, "asymptotic ceiling", asymptote_values},
		{3, "adversarial 2-eps family", adversarial_family},
		{4, "ratio in [1,2) over 10000 random instances", ratio_regression},
		{5, "power/lengths/measured-speed agreement", triple_agreement},
		{6, "exhaustive ordering oracle", ordering_oracle},
		{7, "swarm synchronization and coverage", swarm_synchronization},
		{8, "ratio monotone in fleet size", ratio_monotonicity},
		{9, "grid argmax totally uniform", grid_certification},
		{10, "common-walk closed form", wuniform_agreement},
	};

	std::set<int> selected;
	for (int i = 1; i < argc; ++i)
		selected.insert(std::atoi(argv[i]));

	int failures = 0;
	for (const auto& criterion : criteria) {
		if (!selected.empty() && selected.count(criterion.number) == 0)
			continue;
		Outcome outcome;
		try {
			outcome = criterion.run();
		} catch (const std::exception& e) {
			outcome.pass = false;
			outcome.detail = std::string("exception: ") + e.what();
		}
		std::printf("%s criterion %d: %s%s%s\n", outcome.pass ? "PASS" : "FAIL",
		            criterion.number, criterion.name,
		            outcome.detail.empty() ? "" : " — ", outcome.detail.c_str());
		if (!outcome.pass)
			++failures;
	}
	return failures;
}
