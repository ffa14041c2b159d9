#include <iostream>

#include "sunit/cli.hpp"

int main(int argc, char** argv) { return sunit::run_cli(argc, argv, std::cout, std::cerr); }
