#include <iostream>

#include "scfe/cli.hpp"

int main(int argc, char** argv) { return scfe::run_cli(argc, argv, std::cout, std::cerr); }
