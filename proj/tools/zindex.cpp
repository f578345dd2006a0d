#include <iostream>

#include "zindex/cli.hpp"

int main(int argc, char** argv) { return zindex::cli::main(argc, argv, std::cout, std::cerr); }
