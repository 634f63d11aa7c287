#include <iostream>

#include "mobkit/cli.hpp"

int main(int argc, char** argv) { return mobkit::cli::run(argc, argv, std::cout, std::cerr); }
