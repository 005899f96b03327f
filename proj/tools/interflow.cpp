#include "interflow/cli/commands.hpp"

#include <iostream>

int main(int argc, char **argv) { return interflow::cli::run(argc, argv, std::cout, std::cerr); }
