#include <iostream>

#include "ietilt/cli.hpp"

int main(int argc, char** argv) { return ietilt::cli::run(argc, argv, std::cout, std::cerr); }
