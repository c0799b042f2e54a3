#include <iostream>

#include "intersector/cli.hpp"

int main(int argc, char** argv) { return intersector::run_cli(argc, argv, std::cout, std::cerr); }
