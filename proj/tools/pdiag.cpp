#include <iostream>

#include "pdiag/cli/commands.hpp"

int main(int argc, char** argv) { return pdiag::cli::run(argc, argv, std::cout, std::cerr); }
