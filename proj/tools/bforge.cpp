#include <iostream>

#include "bforge/cli.hpp"

int main(int argc, char** argv) { return bforge::run_cli(argc, argv, std::cout, std::cerr); }
