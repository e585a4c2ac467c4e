#include <iostream>

#include "etg_cli/commands.hpp"

int main(int argc, char** argv) { return etg::cli::run(argc, argv, std::cout, std::cerr); }
