#include <iostream>

#include "fuzcon/cli.hpp"

int main(int argc, char** argv) { return fuzcon::run_cli(argc, argv, std::cout, std::cerr); }
