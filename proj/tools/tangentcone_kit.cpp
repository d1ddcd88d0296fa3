#include <iostream>

#include "tck/cli.hpp"

int main(int argc, char** argv) { return tck::run_cli(argc, argv, std::cout, std::cerr); }
