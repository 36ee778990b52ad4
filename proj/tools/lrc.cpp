#include <iostream>

#include "lrc/cli/cli.hpp"

int main(int argc, char** argv) { return lrc::cli::run(argc, argv, std::cout, std::cerr); }
