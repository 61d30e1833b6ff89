#include "polignac/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
	return polignac::run_cli(argc, argv, std::cout, std::cerr);
}
