#include <iostream>

#include "linkpred/cli.hpp"

int main(int argc, char** argv) { return linkpred::run_cli(argc, argv, std::cout, std::cerr); }
