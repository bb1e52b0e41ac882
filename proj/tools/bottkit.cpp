#include <iostream>

#include "bottkit_cli.hpp"

int main(int argc, char** argv) { return bottkit::cli::run(argc, argv, std::cout, std::cerr); }
