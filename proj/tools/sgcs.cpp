#include <iostream>

#include "sgcs/cli.hpp"

int main(int argc, char** argv) { return sgcs::cli::run(argc, argv, std::cout, std::cerr); }
