#include <iostream>
#include <string>
#include <vector>

#include "reokern/cli.hpp"

int main(int argc, char **argv) {
	std::vector<std::string> args(argv + 1, argv + argc);
	return reokern::run_cli(args, std::cin, std::cout, std::cerr);
}
