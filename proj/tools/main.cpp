#include <iostream>

#include "trilin/cli.hpp"

int main(int argc, char** argv) { return trilin::cli::run(argc, argv, std::cout, std::cerr); }
