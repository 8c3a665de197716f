#include <iostream>

#include "blend/cli.hpp"

int main(int argc, char** argv) { return blend::run_cli(argc, argv, std::cout, std::cerr); }
