#include <iostream>

#include "racg/cli.hpp"

int main(int argc, char** argv) { return racg::run_cli(argc, argv, std::cout, std::cerr); }
