#include <iostream>

#include "ospchar/cli/cli.hpp"

int main(int argc, char** argv) { return ospchar::cli::run(argc, argv, std::cout, std::cerr); }
