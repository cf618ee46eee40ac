#include <iostream>

#include "psu4/cli.hpp"

int main(int argc, char** argv) { return psu4::run_cli(argc, argv, std::cout, std::cerr); }
