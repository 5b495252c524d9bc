#include <iostream>

#include "tropfrac/cli.hpp"

int main(int argc, char** argv) { return tropfrac::run_cli(argc, argv, std::cout, std::cerr); }
