#include <iostream>

#include "conmod_cli/commands.hpp"

int main(int argc, char** argv) { return conmod::cli::run_cli(argc, argv, std::cout, std::cerr); }
