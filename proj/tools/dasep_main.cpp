#include <dasep/cli/commands.hpp>

#include <iostream>

int main(int argc, char** argv) { return dasep::cli::run(argc, argv, std::cout, std::cerr); }
