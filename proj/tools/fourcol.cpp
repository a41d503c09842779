#include <iostream>

#include "fourcol/cli.hpp"

int main(int argc, char** argv) { return fourcol::cli::run(argc, argv, std::cout, std::cerr); }
