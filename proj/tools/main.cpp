#include <iostream>

#include "apl/cli.hpp"

int main(int argc, char** argv) { return apl::cli::main(argc, argv, std::cout, std::cerr); }
