#include <iostream>

#include "olp/cli.hpp"

int main(int argc, char** argv) {
	std::vector<std::string> args(argv + 1, argv + argc);
	return olp::cli::run(args, std::cout, std::cerr);
}
