#include "beachcomb/cli.hpp"

int main(int argc, char** argv)
{
	return beachcomb::run_cli(argc, argv);
}
