#include <iostream>

#include "delbound/cli.hpp"

int main(int argc, char** argv) { return delbound::run_cli(argc, argv, std::cout, std::cerr); }
