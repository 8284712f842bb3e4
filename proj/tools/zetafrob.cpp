#include <iostream>

#include "zetafrob/cli.hpp"

int main(int argc, char** argv) { return zetafrob::cli::run(argc, argv, std::cout, std::cerr); }
