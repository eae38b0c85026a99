#include "cli/run.hpp"

#include <iostream>

int main(int argc, char** argv) { return qgspec::cli::run(argc, argv, std::cout, std::cerr); }
