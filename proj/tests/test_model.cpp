#include "doctest.h"

#include <functional>
#include <limits>

#include "beachcomb/model.hpp"
#include "beachcomb/oracle.hpp"

#include "test_util.hpp"

using namespace beachcomb;
using test_util::make_instance;

namespace {

Errc thrown_code(const std::function<void()>& fn)
{
	try {
		fn();
	} catch (const Error& e) {
		return e.code();
	}
	FAIL("expected an Error");
	return Errc::usage_error;
}

}  // namespace

TEST_CASE("instance validation accepts a well-formed fleet")
{
	const Instance inst = validate_instance(make_instance({{0.5, 1.0}}));
	CHECK(inst.robots.size() == 1);
	CHECK(inst.length == 1.0);
}

TEST_CASE("instance validation rejects equal searching and walking speeds")
{
	CHECK(thrown_code([] { validate_instance(make_instance({{1.0, 1.0}})); }) ==
	      Errc::search_not_slower_than_walk);
	CHECK(thrown_code([] { validate_instance(make_instance({{2.0, 1.0}})); }) ==
	      Errc::search_not_slower_than_walk);
}

TEST_CASE("instance validation rejects empty fleets and bad lengths")
{
	CHECK(thrown_code([] { validate_instance(make_instance({})); }) == Errc::empty_fleet);
	CHECK(thrown_code([] { validate_instance(make_instance({{0.5, 1.0}}, 0.0)); }) ==
	      Errc::non_positive_length);
	CHECK(thrown_code([] { validate_instance(make_instance({{0.5, 1.0}}, -2.0)); }) ==
	      Errc::non_positive_length);
	const double nan = std::numeric_limits<double>::quiet_NaN();
	CHECK(thrown_code([&] { validate_instance(make_instance({{0.5, 1.0}}, nan)); }) ==
	      Errc::non_positive_length);
}

TEST_CASE("instance validation rejects non-positive speeds and names the robot")
{
	CHECK(thrown_code([] { validate_instance(make_instance({{0.0, 1.0}})); }) ==
	      Errc::non_positive_speed);
	CHECK(thrown_code([] { validate_instance(make_instance({{0.5, -1.0}})); }) ==
	      Errc::non_positive_speed);
	try {
		validate_instance(make_instance({{0.5, 1.0}, {0.0, 1.0}}));
		FAIL("expected an Error");
	} catch (const Error& e) {
		CHECK(std::string(e.what()).find("r2") != std::string::npos);
		CHECK(std::string(e.what()).find("search_speed") != std::string::npos);
	}
}

TEST_CASE("canonical order sorts by walking speed")
{
	const Instance inst = make_instance({{0.5, 2.0}, {0.5, 1.0}});
	CHECK(canonical_offline_order(inst) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("canonical order keeps an already sorted fleet in place")
{
	const Instance inst = make_instance({{0.2, 1.0}, {0.4, 2.0}, {0.6, 3.0}});
	CHECK(canonical_offline_order(inst) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("canonical order breaks walking-speed ties by searching speed")
{
	const Instance inst = make_instance({{0.3, 1.0}, {0.2, 1.0}});
	CHECK(canonical_offline_order(inst) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("canonical order is a permutation and stable under re-sorting")
{
	Rng rng(7);
	for (int round = 0; round < 50; ++round) {
		const int n = rng.uniform_count(12);
		const Instance inst = test_util::random_fleet(rng, n);
		const auto order = canonical_offline_order(inst);

		std::vector<std::size_t> sorted(order);
		std::sort(sorted.begin(), sorted.end());
		for (std::size_t i = 0; i < sorted.size(); ++i)
			CHECK(sorted[i] == i);

		Instance reordered;
		reordered.length = inst.length;
		for (std::size_t idx : order)
			reordered.robots.push_back(inst.robots[idx]);
		const auto again = canonical_offline_order(reordered);
		for (std::size_t i = 0; i < again.size(); ++i)
			CHECK(again[i] == i);
	}
}

TEST_CASE("swapping robots of equal walking speed does not change the ordered power")
{
	Rng rng(11);
	for (int round = 0; round < 50; ++round) {
		const int n = 2 + rng.uniform_count(5);
		Instance inst;
		inst.length = 1.0;
		// draw walking speeds from a tiny set so ties occur
		for (int i = 0; i < n; ++i) {
			const double walk = rng.uniform_count(3);
			const double search = walk * rng.uniform(0.05, 0.95);
			inst.robots.push_back({"r" + std::to_string(i + 1), search, walk});
		}
		std::vector<std::size_t> perm = canonical_offline_order(inst);
		const double base = ordered_search_power(inst.robots, perm);
		for (std::size_t a = 0; a + 1 < perm.size(); ++a)
			for (std::size_t b = a + 1; b < perm.size(); ++b) {
				if (inst.robots[perm[a]].walk_speed != inst.robots[perm[b]].walk_speed)
					continue;
				std::vector<std::size_t> swapped = perm;
				std::swap(swapped[a], swapped[b]);
				const double value = ordered_search_power(inst.robots, swapped);
				CHECK(relative_difference(base, value) < 1e-12);
			}
	}
}
