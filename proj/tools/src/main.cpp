#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return ldwb::run_cli(argc, argv, std::cout, std::cerr); }
