#include <iostream>

#include "cubewall/cli.hpp"

int main(int argc, char** argv) { return cubewall::run_cli(argc, argv, std::cout, std::cerr); }
