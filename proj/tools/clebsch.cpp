#include "clebsch/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return clebsch::cli::run_cli(argc, argv, std::cout, std::cerr); }
