#include <iostream>

#include "simplexharm/cli.hpp"

int main(int argc, char** argv) { return simplexharm::cli::run(argc, argv, std::cout, std::cerr); }
