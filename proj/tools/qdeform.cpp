#include "qdeform/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qdeform::run_cli(argc, argv, std::cout, std::cerr); }
