#include "patineq/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return patineq::run_cli(argc, argv, std::cout, std::cerr); }
