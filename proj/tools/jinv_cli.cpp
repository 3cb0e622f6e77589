#include <iostream>

#include "jinv/cli.hpp"

int main(int argc, char** argv) { return jinv::cli::main_entry(argc, argv, std::cout, std::cerr); }
