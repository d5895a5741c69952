#include <iostream>

#include "utlab/cli.hpp"

int main(int argc, char** argv) { return utlab::cli::main_entry(argc, argv, std::cout, std::cerr); }
